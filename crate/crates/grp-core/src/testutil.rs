//! Shared proptest strategies for unit tests.

use proptest::prelude::*;

use crate::word::GroupWord;

/// Random presentation words up to depth 4 with arities in `1..=5`.
pub(crate) fn arb_word() -> impl Strategy<Value = GroupWord> {
    let leaf = prop_oneof![Just(GroupWord::Triv), Just(GroupWord::Zed)];
    leaf.prop_recursive(4, 24, 4, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| GroupWord::prod(a, b)),
            (inner, 1usize..=5).prop_map(|(a, n)| GroupWord::wreath(a, n)),
        ]
    })
}
