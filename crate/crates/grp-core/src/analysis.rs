//! Decision procedures on symbolic elements: centrality, commutator-subgroup
//! membership with constructive witnesses, abelianization, and exact integer
//! rank.
//!
//! For a word `w` with `b = beta1(w)`, the center of the named group and its
//! abelianization are both free abelian of rank `b`. [`center_generators`]
//! constructs `b` central elements whose abelianization matrix has rank `b`,
//! which is how the rank statement is checked at desk scale.

use std::fmt;

use num_bigint::BigInt;
use rand::Rng;
use thiserror::Error;

use crate::element::{identity, inverse, multiply, sample_element, Element, ElementError};
use crate::word::GroupWord;

/// Image of an element under abelianization: one integer per `Z` symbol of
/// the word, ordered by occurrence in the AST (a wreath's own `Z` slot comes
/// after its base's slots). Componentwise addition is the group law.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianVector(Vec<i64>);

impl AbelianVector {
    pub fn zero(len: usize) -> AbelianVector {
        AbelianVector(vec![0; len])
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&v| v == 0)
    }

    /// Componentwise sum; both vectors must come from the same word.
    pub fn try_add(&self, other: &AbelianVector) -> Result<AbelianVector, ElementError> {
        assert_eq!(self.len(), other.len(), "vector length mismatch");
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(ElementError::Overflow))
            .collect::<Result<Vec<_>, _>>()
            .map(AbelianVector)
    }
}

impl fmt::Display for AbelianVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

fn mismatch(w: &GroupWord, x: &Element) -> ElementError {
    ElementError::TypeMismatch {
        word: w.to_string(),
        element: x.to_string(),
    }
}

/// The image of `x` under the abelianization homomorphism: integers map to
/// themselves, pairs concatenate, and a wreath element `(a, k)` maps to the
/// base image of `a[0] · a[1] · ... · a[n-1]` followed by `k`. The base
/// image of the coordinate product is accumulated as the sum of the
/// coordinates' images, which is the same vector without the intermediate
/// products.
pub fn abelianize(w: &GroupWord, x: &Element) -> Result<AbelianVector, ElementError> {
    let mut out = vec![0i64; w.beta1()];
    accumulate_image(w, x, &mut out)?;
    Ok(AbelianVector(out))
}

fn accumulate_image(w: &GroupWord, x: &Element, out: &mut [i64]) -> Result<(), ElementError> {
    match (w, x) {
        (GroupWord::Triv, Element::Triv) => Ok(()),
        (GroupWord::Zed, Element::Int(k)) => {
            out[0] = out[0].checked_add(*k).ok_or(ElementError::Overflow)?;
            Ok(())
        }
        (GroupWord::Prod(lw, rw), Element::Pair(a, b)) => {
            let split = lw.beta1();
            accumulate_image(lw, a, &mut out[..split])?;
            accumulate_image(rw, b, &mut out[split..])
        }
        (GroupWord::Wreath(base, n), Element::Wreath { coords, shift }) if coords.len() == *n => {
            let split = out.len() - 1;
            for c in coords {
                accumulate_image(base, c, &mut out[..split])?;
            }
            out[split] = out[split]
                .checked_add(*shift)
                .ok_or(ElementError::Overflow)?;
            Ok(())
        }
        _ => Err(mismatch(w, x)),
    }
}

/// Structural centrality test: a wreath element over a nontrivial base is
/// central iff its shift is a multiple of the arity, all coordinates are
/// equal, and the common coordinate is central in the base; over a trivial
/// base the whole wreath is abelian. Equivalent to commuting with every
/// member of `generating_set(w)`.
pub fn is_central(w: &GroupWord, x: &Element) -> Result<bool, ElementError> {
    match (w, x) {
        (GroupWord::Triv, Element::Triv) => Ok(true),
        (GroupWord::Zed, Element::Int(_)) => Ok(true),
        (GroupWord::Prod(lw, rw), Element::Pair(a, b)) => {
            Ok(is_central(lw, a)? && is_central(rw, b)?)
        }
        (GroupWord::Wreath(base, n), Element::Wreath { coords, shift }) if coords.len() == *n => {
            // Over a trivial base the wreath is infinite cyclic via the
            // shift, so everything is central; the shift condition only
            // binds when the base has elements to move.
            if base.beta1() == 0 {
                return Ok(true);
            }
            if shift.rem_euclid(*n as i64) != 0 {
                return Ok(false);
            }
            if coords.iter().any(|c| c != &coords[0]) {
                return Ok(false);
            }
            is_central(base, &coords[0])
        }
        _ => Err(mismatch(w, x)),
    }
}

/// Exactly `beta1(w)` central elements that generate a finite-index
/// subgroup of the center: `1` for `Z`, embedded unions for products, and
/// for `base wrN Z` each base generator replicated diagonally plus the
/// shift power `(e, ..., e; n)`.
pub fn center_generators(w: &GroupWord) -> Vec<Element> {
    match w {
        GroupWord::Triv => Vec::new(),
        GroupWord::Zed => vec![Element::Int(1)],
        GroupWord::Prod(l, r) => {
            let le = identity(l);
            let re = identity(r);
            let mut gens: Vec<Element> = center_generators(l)
                .into_iter()
                .map(|g| Element::pair(g, re.clone()))
                .collect();
            gens.extend(
                center_generators(r)
                    .into_iter()
                    .map(|g| Element::pair(le.clone(), g)),
            );
            gens
        }
        GroupWord::Wreath(base, n) => {
            let mut gens: Vec<Element> = center_generators(base)
                .into_iter()
                .map(|g| Element::wreath(vec![g; *n], 0))
                .collect();
            gens.push(Element::wreath(vec![identity(base); *n], *n as i64));
            gens
        }
    }
}

/// Membership in the commutator subgroup: integers must be 0, pairs check
/// componentwise, and a wreath element `(a, k)` is a member iff `k == 0`
/// and the ordered coordinate product lies in the base's commutator
/// subgroup. Agrees with `abelianize(w, x).is_zero()`.
pub fn is_commutator_element(w: &GroupWord, x: &Element) -> Result<bool, ElementError> {
    match (w, x) {
        (GroupWord::Triv, Element::Triv) => Ok(true),
        (GroupWord::Zed, Element::Int(k)) => Ok(*k == 0),
        (GroupWord::Prod(lw, rw), Element::Pair(a, b)) => {
            Ok(is_commutator_element(lw, a)? && is_commutator_element(rw, b)?)
        }
        (GroupWord::Wreath(base, n), Element::Wreath { coords, shift }) if coords.len() == *n => {
            if *shift != 0 {
                return Ok(false);
            }
            let mut prod = identity(base);
            for c in coords {
                prod = multiply(base, &prod, c)?;
            }
            is_commutator_element(base, &prod)
        }
        _ => Err(mismatch(w, x)),
    }
}

/// A decomposition of a commutator-subgroup member into an ordered product
/// of commutators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutatorWitness {
    pub pairs: Vec<(Element, Element)>,
}

impl CommutatorWitness {
    /// The ordered product `[p0, q0] · [p1, q1] · ...`.
    pub fn product(&self, w: &GroupWord) -> Result<Element, ElementError> {
        let mut acc = identity(w);
        for (p, q) in &self.pairs {
            let c = crate::element::commutator(w, p, q)?;
            acc = multiply(w, &acc, &c)?;
        }
        Ok(acc)
    }

    /// Whether the witnessed product equals `target` exactly.
    pub fn verifies(&self, w: &GroupWord, target: &Element) -> Result<bool, ElementError> {
        Ok(self.product(w)? == *target)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error(transparent)]
    Element(#[from] ElementError),
    #[error("element is not in the commutator subgroup")]
    NotInCommutatorSubgroup,
}

/// Constructs commutator pairs whose ordered product equals `x` exactly.
///
/// For a wreath element the last nontrivial coordinate is repeatedly folded
/// into its left neighbour: right-multiplying by the commutator of
/// `c = (e, .., v⁻¹ at j-1, ..; 1)` and `d = (e, .., v at j-1, ..; 0)`
/// multiplies coordinate `j-1` by `v⁻¹` and coordinate `j` by `v`, so with
/// `v = cur[j]⁻¹` the element reduces to `(a[0]·a[1]·...·a[n-1], e, .., e; 0)`;
/// the coordinate product is then decomposed recursively in the base and
/// embedded in coordinate 0. A commutator's inverse is the swapped
/// commutator, which turns the applied multipliers back into witness pairs.
pub fn commutator_witness(w: &GroupWord, x: &Element) -> Result<CommutatorWitness, WitnessError> {
    if !is_commutator_element(w, x)? {
        return Err(WitnessError::NotInCommutatorSubgroup);
    }
    Ok(CommutatorWitness {
        pairs: witness_pairs(w, x)?,
    })
}

fn witness_pairs(w: &GroupWord, x: &Element) -> Result<Vec<(Element, Element)>, ElementError> {
    match (w, x) {
        (GroupWord::Triv, Element::Triv) => Ok(Vec::new()),
        (GroupWord::Zed, Element::Int(0)) => Ok(Vec::new()),
        (GroupWord::Prod(lw, rw), Element::Pair(a, b)) => {
            let le = identity(lw);
            let re = identity(rw);
            let mut pairs: Vec<(Element, Element)> = witness_pairs(lw, a)?
                .into_iter()
                .map(|(p, q)| (Element::pair(p, re.clone()), Element::pair(q, re.clone())))
                .collect();
            pairs.extend(
                witness_pairs(rw, b)?
                    .into_iter()
                    .map(|(p, q)| (Element::pair(le.clone(), p), Element::pair(le.clone(), q))),
            );
            Ok(pairs)
        }
        (GroupWord::Wreath(base, n), Element::Wreath { coords, shift: 0 }) => {
            let n = *n;
            let e = identity(base);
            let mut cur = coords.clone();
            // Multipliers applied on the right, in order.
            let mut folds: Vec<(Element, Element)> = Vec::new();
            for j in (1..n).rev() {
                if cur[j] == e {
                    continue;
                }
                let v = inverse(base, &cur[j])?;
                let mut c_coords = vec![e.clone(); n];
                c_coords[j - 1] = cur[j].clone(); // v⁻¹
                let mut d_coords = vec![e.clone(); n];
                d_coords[j - 1] = v;
                folds.push((Element::wreath(c_coords, 1), Element::wreath(d_coords, 0)));
                cur[j - 1] = multiply(base, &cur[j - 1], &cur[j])?;
                cur[j] = e.clone();
            }
            // cur is now (prod, e, ..., e; 0); decompose prod in the base.
            let mut pairs: Vec<(Element, Element)> = witness_pairs(base, &cur[0])?
                .into_iter()
                .map(|(p, q)| {
                    let embed = |v: Element| {
                        let mut coords = vec![e.clone(); n];
                        coords[0] = v;
                        Element::wreath(coords, 0)
                    };
                    (embed(p), embed(q))
                })
                .collect();
            // x = (prod, e, .., e; 0) · folds_m⁻¹ · ... · folds_1⁻¹ and
            // [c, d]⁻¹ = [d, c].
            pairs.extend(folds.into_iter().rev().map(|(c, d)| (d, c)));
            Ok(pairs)
        }
        _ => Err(mismatch(w, x)),
    }
}

/// Draws an element of the commutator subgroup: coordinates are random
/// within the bound except that the last one is corrected so the coordinate
/// product is itself a recursively drawn member of the base's commutator
/// subgroup.
pub fn sample_commutator_subgroup_element<R: Rng>(
    w: &GroupWord,
    bound: i64,
    rng: &mut R,
) -> Result<Element, ElementError> {
    match w {
        GroupWord::Triv => Ok(Element::Triv),
        GroupWord::Zed => Ok(Element::Int(0)),
        GroupWord::Prod(l, r) => {
            let a = sample_commutator_subgroup_element(l, bound, rng)?;
            let b = sample_commutator_subgroup_element(r, bound, rng)?;
            Ok(Element::pair(a, b))
        }
        GroupWord::Wreath(base, n) => {
            let mut coords: Vec<Element> = (0..n - 1)
                .map(|_| sample_element(base, bound, rng))
                .collect();
            let mut prefix = identity(base);
            for c in &coords {
                prefix = multiply(base, &prefix, c)?;
            }
            let member = sample_commutator_subgroup_element(base, bound, rng)?;
            coords.push(multiply(base, &inverse(base, &prefix)?, &member)?);
            Ok(Element::wreath(coords, 0))
        }
    }
}

/// Rank of an integer matrix over the rationals, by fraction-free row
/// elimination in exact big-integer arithmetic.
pub fn integer_rank(matrix: &[Vec<i64>]) -> usize {
    if matrix.is_empty() {
        return 0;
    }
    let cols = matrix[0].len();
    assert!(
        matrix.iter().all(|row| row.len() == cols),
        "matrix must be rectangular"
    );
    let zero = BigInt::from(0);
    let mut m: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|row| row.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let rows = m.len();

    let mut rank = 0;
    let mut col = 0;
    while rank < rows && col < cols {
        let Some(pivot_row) = (rank..rows).find(|&r| m[r][col] != zero) else {
            col += 1;
            continue;
        };
        m.swap(rank, pivot_row);
        let (pivot_rows, rest) = m.split_at_mut(rank + 1);
        let pivot = &pivot_rows[rank];
        for row in rest.iter_mut() {
            if row[col] == zero {
                continue;
            }
            let pivot_value = pivot[col].clone();
            let row_value = row[col].clone();
            for (v, p) in row.iter_mut().zip(pivot.iter()).skip(col) {
                *v = &*v * &pivot_value - p * &row_value;
            }
        }
        rank += 1;
        col += 1;
    }
    rank
}
