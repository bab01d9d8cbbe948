//! Cayley-table groups and the hard-coded catalog used by the oracle.

use std::collections::HashMap;
use std::fmt;

use super::OracleError;

/// A finite group given by its full Cayley table. The identity is always
/// index 0; the table is validated as a Latin square with two-sided
/// inverses, and associativity is checked exhaustively up to order 64 and
/// on a deterministic sample of triples above that.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (order {})", self.name, self.order)
    }
}

impl FiniteGroup {
    pub fn from_table(
        name: impl Into<String>,
        rows: Vec<Vec<usize>>,
    ) -> Result<FiniteGroup, OracleError> {
        let name = name.into();
        let order = rows.len();
        let invalid = |message: &str| OracleError::InvalidTable {
            name: name.clone(),
            message: message.to_string(),
        };
        if order == 0 {
            return Err(invalid("empty table"));
        }
        let mut table = Vec::with_capacity(order * order);
        for row in &rows {
            if row.len() != order {
                return Err(invalid("table is not square"));
            }
            for &v in row {
                if v >= order {
                    return Err(invalid("entry out of range"));
                }
                table.push(v as u32);
            }
        }

        let group = FiniteGroup {
            name,
            order,
            table,
            inverse: Vec::new(),
        };
        group.validated()
    }

    fn validated(mut self) -> Result<FiniteGroup, OracleError> {
        let n = self.order;
        let invalid = |message: String| OracleError::InvalidTable {
            name: self.name.clone(),
            message,
        };

        for i in 0..n {
            if self.mul(0, i) != i || self.mul(i, 0) != i {
                return Err(invalid(format!("index 0 is not an identity at {i}")));
            }
        }

        // Latin square: every row and column is a permutation.
        let mut seen = vec![false; n];
        for i in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for j in 0..n {
                let v = self.mul(i, j);
                if seen[v] {
                    return Err(invalid(format!("row {i} repeats entry {v}")));
                }
                seen[v] = true;
            }
            seen.iter_mut().for_each(|s| *s = false);
            for j in 0..n {
                let v = self.mul(j, i);
                if seen[v] {
                    return Err(invalid(format!("column {i} repeats entry {v}")));
                }
                seen[v] = true;
            }
        }

        let check_assoc = |a: usize, b: usize, c: usize| -> Result<(), OracleError> {
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                Err(invalid(format!("associativity fails at ({a}, {b}, {c})")))
            } else {
                Ok(())
            }
        };
        if n <= 64 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        check_assoc(a, b, c)?;
                    }
                }
            }
        } else {
            // Deterministic spot check; full verification is cubic in the
            // order and only feasible for small tables.
            let mut state = 0x243F_6A88_85A3_08D3u64 ^ n as u64;
            let mut next = || {
                state = state
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                (state >> 33) as usize % n
            };
            for _ in 0..20_000 {
                let (a, b, c) = (next(), next(), next());
                check_assoc(a, b, c)?;
            }
        }

        let mut inverse = vec![u32::MAX; n];
        for (i, slot) in inverse.iter_mut().enumerate() {
            let j = (0..n)
                .find(|&j| self.mul(i, j) == 0)
                .expect("latin square has a right inverse");
            if self.mul(j, i) != 0 {
                return Err(invalid(format!("element {i} has no two-sided inverse")));
            }
            *slot = j as u32;
        }
        self.inverse = inverse;
        Ok(self)
    }

    /// The cyclic group of order `n`, elements identified with residues.
    pub fn cyclic(n: usize) -> FiniteGroup {
        assert!(n >= 1);
        let rows = (0..n)
            .map(|i| (0..n).map(|j| (i + j) % n).collect())
            .collect();
        FiniteGroup::from_table(format!("Z{n}"), rows).expect("cyclic table is a group")
    }

    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
        let n = a.order * b.order;
        let encode = |ia: usize, ib: usize| ia * b.order + ib;
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        encode(
                            a.mul(i / b.order, j / b.order),
                            b.mul(i % b.order, j % b.order),
                        )
                    })
                    .collect()
            })
            .collect();
        FiniteGroup::from_table(format!("{}x{}", a.name, b.name), rows)
            .expect("product of groups is a group")
    }

    /// Closure of a set of permutations under composition, with the
    /// identity at index 0 and multiplication `p · q = p ∘ q`.
    pub fn from_permutations(
        name: impl Into<String>,
        degree: usize,
        generators: &[Vec<usize>],
    ) -> FiniteGroup {
        let identity: Vec<usize> = (0..degree).collect();
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
        index.insert(identity, 0);
        let mut frontier = vec![0usize];
        while let Some(i) = frontier.pop() {
            for g in generators {
                let composed: Vec<usize> = (0..degree).map(|x| elements[i][g[x]]).collect();
                if !index.contains_key(&composed) {
                    index.insert(composed.clone(), elements.len());
                    frontier.push(elements.len());
                    elements.push(composed);
                }
            }
        }
        let n = elements.len();
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let composed: Vec<usize> =
                            (0..degree).map(|x| elements[i][elements[j][x]]).collect();
                        index[&composed]
                    })
                    .collect()
            })
            .collect();
        FiniteGroup::from_table(name, rows).expect("permutation closure is a group")
    }

    pub fn symmetric_3() -> FiniteGroup {
        FiniteGroup::from_permutations("S3", 3, &[vec![1, 2, 0], vec![1, 0, 2]])
    }

    /// Dihedral group of order 8 as the symmetries of a square.
    pub fn dihedral_4() -> FiniteGroup {
        FiniteGroup::from_permutations("D4", 4, &[vec![1, 2, 3, 0], vec![3, 2, 1, 0]])
    }

    pub fn klein_four() -> FiniteGroup {
        let mut g = FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2));
        g.name = "V4".to_string();
        g
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut acc = a;
        let mut k = 1;
        while acc != 0 {
            acc = self.mul(acc, a);
            k += 1;
        }
        k
    }

    /// All subgroups, each as a sorted element list, found by subset
    /// enumeration. Only intended for the small catalog groups.
    pub fn subgroups(&self) -> Vec<Vec<usize>> {
        assert!(self.order <= 16, "subset enumeration needs a small group");
        let n = self.order;
        let mut subgroups = Vec::new();
        for mask in 0u32..(1 << n) {
            if mask & 1 == 0 {
                continue; // must contain the identity
            }
            let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            let closed = members
                .iter()
                .all(|&a| members.iter().all(|&b| mask >> self.mul(a, b) & 1 == 1));
            if closed {
                subgroups.push(members);
            }
        }
        subgroups.sort_by_key(|s| (s.len(), s.clone()));
        subgroups
    }
}

/// The group catalog the oracle draws from: cyclic groups of orders
/// 2, 3, 4, 6, 8, the Klein four-group, `S3`, and the dihedral group of
/// order 8.
pub fn catalog() -> Vec<FiniteGroup> {
    vec![
        FiniteGroup::cyclic(2),
        FiniteGroup::cyclic(3),
        FiniteGroup::cyclic(4),
        FiniteGroup::cyclic(6),
        FiniteGroup::cyclic(8),
        FiniteGroup::klein_four(),
        FiniteGroup::symmetric_3(),
        FiniteGroup::dihedral_4(),
    ]
}

/// Definitional center scan: all elements commuting with everything.
pub fn brute_center(g: &FiniteGroup) -> Vec<usize> {
    (0..g.order())
        .filter(|&z| (0..g.order()).all(|x| g.mul(z, x) == g.mul(x, z)))
        .collect()
}

/// Closure sanity check: whether a subset containing the identity is
/// closed under multiplication and inverses.
pub fn is_subgroup(g: &FiniteGroup, members: &[usize]) -> bool {
    let mut mask = vec![false; g.order()];
    for &m in members {
        mask[m] = true;
    }
    mask[0]
        && members
            .iter()
            .all(|&a| mask[g.inv(a)] && members.iter().all(|&b| mask[g.mul(a, b)]))
}
