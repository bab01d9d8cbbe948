//! Construction of finite wreath products `A Wr_X B` and the three center
//! computations that must agree: the definitional table scan, the
//! orbit-constant formula, and the probe-set centralizer.

use std::collections::BTreeSet;
use std::fmt;

use super::action::WreathAction;
use super::finite_group::{brute_center, FiniteGroup};
use super::OracleError;

/// Elements enumerated per wreath product are capped here.
pub const WREATH_SIZE_CAP: usize = 1_000_000;

/// Materializing a full Cayley table is quadratic in the order; only
/// table-backed operations (the brute center scan) need it, so it gets a
/// tighter cap than enumeration-only computations.
pub const WREATH_TABLE_CAP: usize = 4_096;

/// An element `(f, b)` of `A Wr_X B`: a total map `X -> A` (by element
/// indices) and an element of `B`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiniteWreathElement {
    pub f: Vec<usize>,
    pub b: usize,
}

impl fmt::Display for FiniteWreathElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.f.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "; {})", self.b)
    }
}

/// `|A|^|X| * |B|`, or `None` on overflow.
pub fn wreath_order(a: &FiniteGroup, act: &WreathAction) -> Option<usize> {
    let mut order = act.group().order();
    for _ in 0..act.set_size() {
        order = order.checked_mul(a.order())?;
    }
    Some(order)
}

fn checked_order(a: &FiniteGroup, act: &WreathAction) -> Result<usize, OracleError> {
    match wreath_order(a, act) {
        Some(order) if order <= WREATH_SIZE_CAP => Ok(order),
        Some(order) => Err(OracleError::SizeCapExceeded {
            order,
            cap: WREATH_SIZE_CAP,
        }),
        None => Err(OracleError::SizeCapExceeded {
            order: usize::MAX,
            cap: WREATH_SIZE_CAP,
        }),
    }
}

pub fn wreath_identity(act: &WreathAction) -> FiniteWreathElement {
    FiniteWreathElement {
        f: vec![0; act.set_size()],
        b: 0,
    }
}

/// The multiplication law `(f1, b1) · (f2, b2) = ((f1 ∘ φ_{b2}) · f2, b1 · b2)`.
pub fn wreath_multiply(
    a: &FiniteGroup,
    act: &WreathAction,
    x: &FiniteWreathElement,
    y: &FiniteWreathElement,
) -> FiniteWreathElement {
    let f = (0..act.set_size())
        .map(|t| a.mul(x.f[act.apply(y.b, t)], y.f[t]))
        .collect();
    FiniteWreathElement {
        f,
        b: act.group().mul(x.b, y.b),
    }
}

/// All elements of `A Wr_X B` in mixed-radix order; the identity is first.
pub fn enumerate_wreath_elements(
    a: &FiniteGroup,
    act: &WreathAction,
) -> Result<Vec<FiniteWreathElement>, OracleError> {
    let order = checked_order(a, act)?;
    let base = a.order();
    let functions = order / act.group().order();
    let mut elements = Vec::with_capacity(order);
    for idx in 0..order {
        let b = idx / functions;
        let mut rem = idx % functions;
        let f = (0..act.set_size())
            .map(|_| {
                let digit = rem % base;
                rem /= base;
                digit
            })
            .collect();
        elements.push(FiniteWreathElement { f, b });
    }
    Ok(elements)
}

fn element_index(a: &FiniteGroup, act: &WreathAction, e: &FiniteWreathElement) -> usize {
    let base = a.order();
    let mut f_index = 0;
    for &digit in e.f.iter().rev() {
        f_index = f_index * base + digit;
    }
    let functions = base.pow(act.set_size() as u32);
    e.b * functions + f_index
}

/// The wreath product as a validated Cayley-table group, together with the
/// element corresponding to each table index.
#[derive(Debug, Clone)]
pub struct BuiltWreath {
    pub group: FiniteGroup,
    pub elements: Vec<FiniteWreathElement>,
}

impl BuiltWreath {
    /// Indices of the table-scan center as explicit wreath elements.
    pub fn center_elements(&self) -> BTreeSet<FiniteWreathElement> {
        brute_center(&self.group)
            .into_iter()
            .map(|i| self.elements[i].clone())
            .collect()
    }
}

/// Builds the full Cayley table of `A Wr_X B` with the quoted
/// multiplication law. Construction validates the table (Latin square,
/// identity, inverses, associativity).
pub fn build_finite_wreath(
    a: &FiniteGroup,
    act: &WreathAction,
) -> Result<BuiltWreath, OracleError> {
    let order = checked_order(a, act)?;
    if order > WREATH_TABLE_CAP {
        return Err(OracleError::TableCapExceeded {
            order,
            cap: WREATH_TABLE_CAP,
        });
    }
    let elements = enumerate_wreath_elements(a, act)?;
    let rows = elements
        .iter()
        .map(|x| {
            elements
                .iter()
                .map(|y| element_index(a, act, &wreath_multiply(a, act, x, y)))
                .collect()
        })
        .collect();
    let name = format!("{} Wr[{}] {}", a.name(), act.set_size(), act.group().name());
    let group = FiniteGroup::from_table(name, rows)?;
    Ok(BuiltWreath { group, elements })
}

/// The center according to the orbit formula: all `(f, b)` where `f` is
/// constant on each orbit with values in `Z(A)` and
/// `b ∈ ker φ ∩ Z(B)`.
///
/// The kernel condition comes from probing with functions that take a
/// value `c != e` somewhere, so it only binds when `A` is nontrivial; for
/// `|A| = 1` the wreath product is isomorphic to `B` and the center is
/// `{e} x Z(B)`.
pub fn formula_center(
    a: &FiniteGroup,
    act: &WreathAction,
) -> Result<BTreeSet<FiniteWreathElement>, OracleError> {
    checked_order(a, act)?;
    let central_a = brute_center(a);
    let central_b = brute_center(act.group());
    let shifts: Vec<usize> = if a.order() == 1 {
        central_b
    } else {
        act.kernel()
            .into_iter()
            .filter(|b| central_b.contains(b))
            .collect()
    };

    let orbits = act.orbits();
    let mut orbit_of = vec![0usize; act.set_size()];
    for (i, orbit) in orbits.iter().enumerate() {
        for &x in orbit {
            orbit_of[x] = i;
        }
    }

    let mut center = BTreeSet::new();
    let choices = central_a.len();
    let mut assignment = vec![0usize; orbits.len()];
    loop {
        let f: Vec<usize> = (0..act.set_size())
            .map(|x| central_a[assignment[orbit_of[x]]])
            .collect();
        for &b in &shifts {
            center.insert(FiniteWreathElement { f: f.clone(), b });
        }
        // Advance the mixed-radix assignment of central values to orbits.
        let mut pos = 0;
        loop {
            if pos == assignment.len() {
                return Ok(center);
            }
            assignment[pos] += 1;
            if assignment[pos] < choices {
                break;
            }
            assignment[pos] = 0;
            pos += 1;
        }
    }
}

/// The centralizer of the probe set `S = {(g_{y,c}, p)}` where `g_{y,c}`
/// is `c` at `y` and the identity elsewhere, computed by scanning every
/// element of the wreath product. Must equal the brute-force center.
pub fn probe_centralizer(
    a: &FiniteGroup,
    act: &WreathAction,
) -> Result<BTreeSet<FiniteWreathElement>, OracleError> {
    checked_order(a, act)?;
    let mut probes = Vec::new();
    for y in 0..act.set_size() {
        for c in 0..a.order() {
            for p in 0..act.group().order() {
                let mut f = vec![0; act.set_size()];
                f[y] = c;
                probes.push(FiniteWreathElement { f, b: p });
            }
        }
    }

    let candidates = enumerate_wreath_elements(a, act)?;
    Ok(candidates
        .into_iter()
        .filter(|cand| {
            probes.iter().all(|probe| {
                wreath_multiply(a, act, cand, probe) == wreath_multiply(a, act, probe, cand)
            })
        })
        .collect())
}
