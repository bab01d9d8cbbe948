//! Actions of a finite group on a finite set, as validated homomorphisms
//! into the permutation group of the set.

use super::finite_group::FiniteGroup;
use super::OracleError;

/// A (possibly non-effective) action of `B` on `X = {0, .., set_size-1}`:
/// one permutation per group element, with `perm(b1 · b2) = perm(b1) ∘
/// perm(b2)` checked at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WreathAction {
    group: FiniteGroup,
    set_size: usize,
    perms: Vec<Vec<usize>>,
}

impl WreathAction {
    pub fn new(group: FiniteGroup, perms: Vec<Vec<usize>>) -> Result<WreathAction, OracleError> {
        let set_size = perms
            .first()
            .map(|p| p.len())
            .ok_or_else(|| OracleError::InvalidAction("no permutations given".into()))?;
        if perms.len() != group.order() {
            return Err(OracleError::InvalidAction(format!(
                "expected {} permutations, got {}",
                group.order(),
                perms.len()
            )));
        }
        let mut seen = vec![false; set_size];
        for (b, perm) in perms.iter().enumerate() {
            if perm.len() != set_size {
                return Err(OracleError::InvalidAction(format!(
                    "permutation {b} has wrong length"
                )));
            }
            seen.iter_mut().for_each(|s| *s = false);
            for &img in perm {
                if img >= set_size || seen[img] {
                    return Err(OracleError::InvalidAction(format!(
                        "image of {b} is not a permutation"
                    )));
                }
                seen[img] = true;
            }
        }
        if (0..set_size).any(|x| perms[0][x] != x) {
            return Err(OracleError::InvalidAction(
                "identity does not act trivially".into(),
            ));
        }
        for b1 in 0..group.order() {
            for b2 in 0..group.order() {
                let prod = group.mul(b1, b2);
                for x in 0..set_size {
                    if perms[prod][x] != perms[b1][perms[b2][x]] {
                        return Err(OracleError::InvalidAction(format!(
                            "not a homomorphism at ({b1}, {b2})"
                        )));
                    }
                }
            }
        }
        Ok(WreathAction {
            group,
            set_size,
            perms,
        })
    }

    /// Every element fixes every point; the kernel is all of `B`.
    pub fn trivial(group: FiniteGroup, set_size: usize) -> WreathAction {
        assert!(set_size >= 1);
        let perms = vec![(0..set_size).collect(); group.order()];
        WreathAction::new(group, perms).expect("trivial action is a homomorphism")
    }

    /// Cyclic `B = Z_m` shifting `X = Z_n` by `b · x = (x + b) mod n`;
    /// a homomorphism exactly when `n` divides `m`, and non-effective
    /// whenever `n < m`.
    pub fn cyclic_shift(modulus: usize, set_size: usize) -> Result<WreathAction, OracleError> {
        let group = FiniteGroup::cyclic(modulus);
        let perms = (0..modulus)
            .map(|b| (0..set_size).map(|x| (x + b) % set_size).collect())
            .collect();
        WreathAction::new(group, perms)
    }

    /// Disjoint union of left-coset actions `b · gH = (bg)H`, one coset
    /// space per listed subgroup. Every action of a finite group on a
    /// finite set decomposes this way, so this is the general sampler
    /// substrate; choosing large subgroups produces non-effective actions.
    pub fn from_coset_parts(group: FiniteGroup, parts: &[Vec<usize>]) -> WreathAction {
        assert!(!parts.is_empty());
        let mut cosets: Vec<Vec<usize>> = Vec::new();
        let mut part_offsets = Vec::new();
        for part in parts {
            part_offsets.push(cosets.len());
            let mut seen: Vec<Vec<usize>> = Vec::new();
            for g in 0..group.order() {
                let mut coset: Vec<usize> = part.iter().map(|&h| group.mul(g, h)).collect();
                coset.sort_unstable();
                if !seen.contains(&coset) {
                    seen.push(coset);
                }
            }
            cosets.extend(seen);
        }
        let coset_index = |offset: usize, count: usize, member: usize| -> usize {
            (offset..offset + count)
                .find(|&i| cosets[i].binary_search(&member).is_ok())
                .expect("cosets partition the group")
        };
        let mut perms = Vec::with_capacity(group.order());
        for b in 0..group.order() {
            let mut perm = vec![0usize; cosets.len()];
            for (part_idx, part) in parts.iter().enumerate() {
                let offset = part_offsets[part_idx];
                let count = group.order() / part.len();
                for i in offset..offset + count {
                    let rep = cosets[i][0];
                    perm[i] = coset_index(offset, count, group.mul(b, rep));
                }
            }
            perms.push(perm);
        }
        WreathAction::new(group, perms).expect("coset action is a homomorphism")
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn set_size(&self) -> usize {
        self.set_size
    }

    /// The image of point `x` under the permutation of `b`.
    pub fn apply(&self, b: usize, x: usize) -> usize {
        self.perms[b][x]
    }

    /// Elements acting as the identity permutation.
    pub fn kernel(&self) -> Vec<usize> {
        (0..self.group.order())
            .filter(|&b| (0..self.set_size).all(|x| self.perms[b][x] == x))
            .collect()
    }

    pub fn is_effective(&self) -> bool {
        self.kernel().len() == 1
    }

    /// The orbit partition of `X`, each orbit sorted, orbits ordered by
    /// their least element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut assigned = vec![false; self.set_size];
        let mut orbits = Vec::new();
        for start in 0..self.set_size {
            if assigned[start] {
                continue;
            }
            let mut orbit = vec![start];
            assigned[start] = true;
            let mut frontier = vec![start];
            while let Some(x) = frontier.pop() {
                for b in 0..self.group.order() {
                    let y = self.perms[b][x];
                    if !assigned[y] {
                        assigned[y] = true;
                        orbit.push(y);
                        frontier.push(y);
                    }
                }
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        orbits
    }
}
