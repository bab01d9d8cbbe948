//! Symbolic elements of the group named by a [`GroupWord`], with exact
//! arithmetic.
//!
//! An element mirrors the shape of its word: the trivial element for `1`,
//! an integer for `Z`, a pair for a product, and `n` coordinates plus a
//! shift for `base wrN Z`. Shifts live in `Z`, never reduced modulo `n`.
//!
//! Multiplication in `A wrN Z` follows the semidirect-product law with the
//! shift acting by cyclic coordinate rotation: for `x = (a, k)` and
//! `y = (b, p)`, coordinate `i` of `x·y` is `a[(i + p) mod n] * b[i]` and
//! the shift is `k + p`.
//!
//! Integers are fixed-width (`i64`) with checked arithmetic: overflow is
//! reported as [`ElementError::Overflow`], never wrapped.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::word::GroupWord;

/// A symbolic group element. Equality is structural: coordinatewise, with
/// shifts compared as integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Element {
    /// The unique element of the trivial group, written `e`.
    Triv,
    /// An integer, element of `Z`.
    Int(i64),
    /// An element of a direct product, written `<a, b>`.
    Pair(Box<Element>, Box<Element>),
    /// An element of a wreath product, written `(c0, ..., c{n-1}; shift)`.
    Wreath { coords: Vec<Element>, shift: i64 },
}

impl Element {
    pub fn pair(left: Element, right: Element) -> Element {
        Element::Pair(Box::new(left), Box::new(right))
    }

    pub fn wreath(coords: Vec<Element>, shift: i64) -> Element {
        Element::Wreath { coords, shift }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ElementError {
    #[error("element does not match word `{word}`: {element}")]
    TypeMismatch { word: String, element: String },
    #[error("integer overflow in element arithmetic")]
    Overflow,
}

fn mismatch(w: &GroupWord, x: &Element) -> ElementError {
    ElementError::TypeMismatch {
        word: w.to_string(),
        element: x.to_string(),
    }
}

/// Whether the element's shape matches the word.
pub fn typecheck(w: &GroupWord, x: &Element) -> bool {
    match (w, x) {
        (GroupWord::Triv, Element::Triv) => true,
        (GroupWord::Zed, Element::Int(_)) => true,
        (GroupWord::Prod(lw, rw), Element::Pair(lx, rx)) => typecheck(lw, lx) && typecheck(rw, rx),
        (GroupWord::Wreath(base, n), Element::Wreath { coords, .. }) => {
            coords.len() == *n && coords.iter().all(|c| typecheck(base, c))
        }
        _ => false,
    }
}

/// The neutral element of the group named by `w`.
pub fn identity(w: &GroupWord) -> Element {
    match w {
        GroupWord::Triv => Element::Triv,
        GroupWord::Zed => Element::Int(0),
        GroupWord::Prod(l, r) => Element::pair(identity(l), identity(r)),
        GroupWord::Wreath(base, n) => Element::wreath(vec![identity(base); *n], 0),
    }
}

/// Group multiplication `x · y`.
pub fn multiply(w: &GroupWord, x: &Element, y: &Element) -> Result<Element, ElementError> {
    match (w, x, y) {
        (GroupWord::Triv, Element::Triv, Element::Triv) => Ok(Element::Triv),
        (GroupWord::Zed, Element::Int(a), Element::Int(b)) => a
            .checked_add(*b)
            .map(Element::Int)
            .ok_or(ElementError::Overflow),
        (GroupWord::Prod(lw, rw), Element::Pair(la, ra), Element::Pair(lb, rb)) => {
            Ok(Element::pair(multiply(lw, la, lb)?, multiply(rw, ra, rb)?))
        }
        (
            GroupWord::Wreath(base, n),
            Element::Wreath {
                coords: a,
                shift: k,
            },
            Element::Wreath {
                coords: b,
                shift: p,
            },
        ) if a.len() == *n && b.len() == *n => {
            let n = *n;
            let rot = p.rem_euclid(n as i64) as usize;
            let mut coords = Vec::with_capacity(n);
            for i in 0..n {
                coords.push(multiply(base, &a[(i + rot) % n], &b[i])?);
            }
            let shift = k.checked_add(*p).ok_or(ElementError::Overflow)?;
            Ok(Element::wreath(coords, shift))
        }
        _ => Err(mismatch(w, if typecheck(w, x) { y } else { x })),
    }
}

/// Group inverse: for a wreath element `(a, k)` the result is `(a', -k)`
/// with `a'[j] = a[(j - k) mod n]⁻¹`.
pub fn inverse(w: &GroupWord, x: &Element) -> Result<Element, ElementError> {
    match (w, x) {
        (GroupWord::Triv, Element::Triv) => Ok(Element::Triv),
        (GroupWord::Zed, Element::Int(a)) => a
            .checked_neg()
            .map(Element::Int)
            .ok_or(ElementError::Overflow),
        (GroupWord::Prod(lw, rw), Element::Pair(l, r)) => {
            Ok(Element::pair(inverse(lw, l)?, inverse(rw, r)?))
        }
        (GroupWord::Wreath(base, n), Element::Wreath { coords, shift }) if coords.len() == *n => {
            let n = *n;
            let rot = shift.rem_euclid(n as i64) as usize;
            let mut inv = Vec::with_capacity(n);
            for j in 0..n {
                inv.push(inverse(base, &coords[(j + n - rot) % n])?);
            }
            let shift = shift.checked_neg().ok_or(ElementError::Overflow)?;
            Ok(Element::wreath(inv, shift))
        }
        _ => Err(mismatch(w, x)),
    }
}

/// The commutator `[x, y] = x · y · x⁻¹ · y⁻¹` as a multiply chain.
pub fn commutator(w: &GroupWord, x: &Element, y: &Element) -> Result<Element, ElementError> {
    let xy = multiply(w, x, y)?;
    let xyx = multiply(w, &xy, &inverse(w, x)?)?;
    multiply(w, &xyx, &inverse(w, y)?)
}

/// A finite generating set of the group named by `w`: `1` for `Z`,
/// embedded unions for products, and for `base wrN Z` the base generators
/// in coordinate 0 plus the pure shift.
pub fn generating_set(w: &GroupWord) -> Vec<Element> {
    match w {
        GroupWord::Triv => Vec::new(),
        GroupWord::Zed => vec![Element::Int(1)],
        GroupWord::Prod(l, r) => {
            let le = identity(l);
            let re = identity(r);
            let mut gens: Vec<Element> = generating_set(l)
                .into_iter()
                .map(|g| Element::pair(g, re.clone()))
                .collect();
            gens.extend(
                generating_set(r)
                    .into_iter()
                    .map(|g| Element::pair(le.clone(), g)),
            );
            gens
        }
        GroupWord::Wreath(base, n) => {
            let e = identity(base);
            let mut gens: Vec<Element> = generating_set(base)
                .into_iter()
                .map(|g| {
                    let mut coords = vec![e.clone(); *n];
                    coords[0] = g;
                    Element::wreath(coords, 0)
                })
                .collect();
            gens.push(Element::wreath(vec![e; *n], 1));
            gens
        }
    }
}

/// Draws an element with every integer coordinate and every shift uniform
/// in `[-bound, bound]`, consuming the generator in AST pre-order
/// (coordinates before the shift).
pub fn sample_element<R: Rng>(w: &GroupWord, bound: i64, rng: &mut R) -> Element {
    match w {
        GroupWord::Triv => Element::Triv,
        GroupWord::Zed => Element::Int(rng.gen_range(-bound..=bound)),
        GroupWord::Prod(l, r) => {
            let left = sample_element(l, bound, rng);
            let right = sample_element(r, bound, rng);
            Element::pair(left, right)
        }
        GroupWord::Wreath(base, n) => {
            let coords = (0..*n).map(|_| sample_element(base, bound, rng)).collect();
            Element::wreath(coords, rng.gen_range(-bound..=bound))
        }
    }
}

/// Deterministic seeded random element; `bound` must be at least 1.
pub fn random_element(w: &GroupWord, bound: i64, seed: u64) -> Element {
    assert!(bound >= 1, "bound must be at least 1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample_element(w, bound, &mut rng)
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Triv => f.write_str("e"),
            Element::Int(k) => write!(f, "{k}"),
            Element::Pair(l, r) => write!(f, "<{l}, {r}>"),
            Element::Wreath { coords, shift } => {
                f.write_str("(")?;
                for (i, c) in coords.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, "; {shift})")
            }
        }
    }
}

/// Renders an element in the concrete grammar after checking its shape;
/// `parse_element(w, &print_element(w, x)?) == x`.
pub fn print_element(w: &GroupWord, x: &Element) -> Result<String, ElementError> {
    if !typecheck(w, x) {
        return Err(mismatch(w, x));
    }
    Ok(x.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ElementParseError {
    #[error("syntax error at byte {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("element does not match word `{word}`: {element}")]
    ShapeMismatch { word: String, element: String },
}

/// Untyped element syntax; the shape check against a word happens after
/// parsing so syntax and shape errors stay distinct.
enum RawElement {
    Triv,
    Int(i64),
    Pair(Box<RawElement>, Box<RawElement>),
    Wreath(Vec<RawElement>, i64),
}

impl fmt::Display for RawElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RawElement::Triv => f.write_str("e"),
            RawElement::Int(k) => write!(f, "{k}"),
            RawElement::Pair(l, r) => write!(f, "<{l}, {r}>"),
            RawElement::Wreath(coords, shift) => {
                f.write_str("(")?;
                for (i, c) in coords.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, "; {shift})")
            }
        }
    }
}

struct ElementParser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> ElementParser<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, ElementParseError> {
        Err(ElementParseError::Syntax {
            pos: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self
            .text
            .as_bytes()
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> Result<(), ElementParseError> {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            self.err(format!("expected `{c}`"))
        }
    }

    fn int(&mut self) -> Result<i64, ElementParseError> {
        self.skip_ws();
        let start = self.pos;
        let bytes = self.text.as_bytes();
        let mut end = start;
        if bytes.get(end) == Some(&b'-') || bytes.get(end) == Some(&b'+') {
            end += 1;
        }
        let digits_start = end;
        while bytes.get(end).is_some_and(|b| b.is_ascii_digit()) {
            end += 1;
        }
        if end == digits_start {
            return self.err("expected integer");
        }
        let value = self.text[start..end]
            .parse()
            .map_err(|_| ElementParseError::Syntax {
                pos: start,
                message: "integer out of range".into(),
            })?;
        self.pos = end;
        Ok(value)
    }

    // element := "e" | INT | "<" element "," element ">"
    //          | "(" element ("," element)* ";" INT ")"
    fn element(&mut self) -> Result<RawElement, ElementParseError> {
        match self.peek() {
            Some('e') => {
                self.pos += 1;
                Ok(RawElement::Triv)
            }
            Some('<') => {
                self.pos += 1;
                let left = self.element()?;
                self.eat(',')?;
                let right = self.element()?;
                self.eat('>')?;
                Ok(RawElement::Pair(Box::new(left), Box::new(right)))
            }
            Some('(') => {
                self.pos += 1;
                let mut coords = vec![self.element()?];
                while self.peek() == Some(',') {
                    self.pos += 1;
                    coords.push(self.element()?);
                }
                self.eat(';')?;
                let shift = self.int()?;
                self.eat(')')?;
                Ok(RawElement::Wreath(coords, shift))
            }
            Some(c) if c == '-' || c == '+' || c.is_ascii_digit() => {
                Ok(RawElement::Int(self.int()?))
            }
            _ => self.err("expected `e`, integer, `<` or `(`"),
        }
    }
}

fn shape(w: &GroupWord, raw: &RawElement) -> Result<Element, ElementParseError> {
    let fail = || ElementParseError::ShapeMismatch {
        word: w.to_string(),
        element: raw.to_string(),
    };
    match (w, raw) {
        (GroupWord::Triv, RawElement::Triv) => Ok(Element::Triv),
        (GroupWord::Zed, RawElement::Int(k)) => Ok(Element::Int(*k)),
        (GroupWord::Prod(lw, rw), RawElement::Pair(l, r)) => {
            Ok(Element::pair(shape(lw, l)?, shape(rw, r)?))
        }
        (GroupWord::Wreath(base, n), RawElement::Wreath(coords, shift)) if coords.len() == *n => {
            let coords = coords
                .iter()
                .map(|c| shape(base, c))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Element::wreath(coords, *shift))
        }
        _ => Err(fail()),
    }
}

/// Parses the concrete element grammar against the shape of `w`.
pub fn parse_element(w: &GroupWord, text: &str) -> Result<Element, ElementParseError> {
    let mut parser = ElementParser { text, pos: 0 };
    let raw = parser.element()?;
    parser.skip_ws();
    if parser.pos != text.len() {
        return parser.err("unexpected trailing input");
    }
    shape(w, &raw)
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::testutil::arb_word;
    use crate::word::parse_word;

    fn w(text: &str) -> GroupWord {
        parse_word(text).unwrap()
    }

    fn el(word: &GroupWord, text: &str) -> Element {
        parse_element(word, text).unwrap()
    }

    #[test]
    fn typecheck_examples() {
        assert!(typecheck(&GroupWord::Zed, &Element::Int(5)));
        let wr2 = w("Z wr2 Z");
        assert!(typecheck(
            &wr2,
            &Element::wreath(vec![Element::Int(1), Element::Int(2)], 1)
        ));
        let wr3 = w("Z wr3 Z");
        assert!(!typecheck(
            &wr3,
            &Element::wreath(vec![Element::Int(1), Element::Int(2)], 1)
        ));
    }

    #[test]
    fn identity_examples() {
        assert_eq!(identity(&GroupWord::Zed), Element::Int(0));
        assert_eq!(identity(&w("Z wr2 Z")), el(&w("Z wr2 Z"), "(0, 0; 0)"));
        assert_eq!(
            identity(&w("Z x 1")),
            Element::pair(Element::Int(0), Element::Triv)
        );
    }

    #[test]
    fn multiply_hand_checked_values() {
        let wr2 = w("Z wr2 Z");
        let got = multiply(&wr2, &el(&wr2, "(1, 2; 0)"), &el(&wr2, "(0, 0; 1)")).unwrap();
        assert_eq!(got, el(&wr2, "(2, 1; 1)"));

        let got = multiply(&wr2, &el(&wr2, "(1, 2; 1)"), &el(&wr2, "(3, 4; 1)")).unwrap();
        assert_eq!(got, el(&wr2, "(5, 5; 2)"));
    }

    /// Independent model of `A wrN Z` with coordinates reduced mod `m`:
    /// elements are functions `x -> Z_m` and the law is the action-on-maps
    /// form `((f1 ∘ φ_p) · f2, k + p)` with `φ_p(x) = (x + p) mod n`.
    fn mod_wreath_mul(n: usize, m: i64, x: (&[i64], i64), y: (&[i64], i64)) -> (Vec<i64>, i64) {
        let phi = |p: i64, t: usize| -> usize { (t as i64 + p).rem_euclid(n as i64) as usize };
        let f = (0..n)
            .map(|t| (x.0[phi(y.1, t)] + y.0[t]).rem_euclid(m))
            .collect();
        (f, (x.1 + y.1).rem_euclid(m))
    }

    fn as_int_coords(x: &Element) -> (Vec<i64>, i64) {
        match x {
            Element::Wreath { coords, shift } => (
                coords
                    .iter()
                    .map(|c| match c {
                        Element::Int(k) => *k,
                        _ => panic!("expected integer coordinate"),
                    })
                    .collect(),
                *shift,
            ),
            _ => panic!("expected wreath element"),
        }
    }

    proptest! {
        #[test]
        fn multiply_agrees_with_mod_m_model(
            n in 1usize..=5,
            seed_x in any::<u64>(),
            seed_y in any::<u64>(),
        ) {
            let m = 1_000_003i64;
            let word = GroupWord::wreath(GroupWord::Zed, n);
            let x = random_element(&word, 50, seed_x);
            let y = random_element(&word, 50, seed_y);
            let got = multiply(&word, &x, &y).unwrap();

            let (xf, xs) = as_int_coords(&x);
            let (yf, ys) = as_int_coords(&y);
            let (ef, es) = mod_wreath_mul(n, m, (&xf, xs), (&yf, ys));
            let (gf, gs) = as_int_coords(&got);
            prop_assert_eq!(gf.iter().map(|v| v.rem_euclid(m)).collect::<Vec<_>>(), ef);
            prop_assert_eq!(gs.rem_euclid(m), es);
        }
    }

    #[test]
    fn inverse_hand_checked_values() {
        let wr2 = w("Z wr2 Z");
        assert_eq!(
            inverse(&wr2, &el(&wr2, "(1, 2; 1)")).unwrap(),
            el(&wr2, "(-2, -1; -1)")
        );
        assert_eq!(
            inverse(&GroupWord::Zed, &Element::Int(7)).unwrap(),
            Element::Int(-7)
        );
        let e = identity(&wr2);
        assert_eq!(inverse(&wr2, &e).unwrap(), e);
    }

    #[test]
    fn commutator_hand_checked_value() {
        let wr2 = w("Z wr2 Z");
        let x = el(&wr2, "(0, -3; 1)");
        let y = el(&wr2, "(0, 3; 0)");
        assert_eq!(commutator(&wr2, &x, &y).unwrap(), el(&wr2, "(3, -3; 0)"));
    }

    #[test]
    fn commutator_degenerate_cases() {
        let word = w("(Z wr3 Z) x Z");
        let x = random_element(&word, 5, 11);
        let e = identity(&word);
        assert_eq!(commutator(&word, &x, &x).unwrap(), e);
        assert_eq!(commutator(&word, &x, &e).unwrap(), e);
        assert_eq!(commutator(&word, &e, &x).unwrap(), e);
    }

    #[test]
    fn shifts_are_never_reduced() {
        let wr2 = w("Z wr2 Z");
        let x = el(&wr2, "(0, 0; 5)");
        let y = el(&wr2, "(0, 0; 9)");
        match multiply(&wr2, &x, &y).unwrap() {
            Element::Wreath { shift, .. } => assert_eq!(shift, 14),
            _ => unreachable!(),
        }
    }

    #[test]
    fn generating_set_examples() {
        assert_eq!(generating_set(&GroupWord::Zed), vec![Element::Int(1)]);
        assert_eq!(generating_set(&GroupWord::Triv), vec![]);
        let wr2 = w("Z wr2 Z");
        assert_eq!(
            generating_set(&wr2),
            vec![el(&wr2, "(1, 0; 0)"), el(&wr2, "(0, 0; 1)")]
        );
    }

    /// Products of at most three generators or inverse generators reach
    /// coordinates other than 0: the shift conjugates coordinate moves.
    #[test]
    fn generator_ball_reaches_shifted_coordinates() {
        use std::collections::HashSet;

        let wr2 = w("Z wr2 Z");
        let gens = generating_set(&wr2);
        let mut symbols: Vec<Element> = gens.clone();
        for g in &gens {
            symbols.push(inverse(&wr2, g).unwrap());
        }

        let mut ball: HashSet<Element> = HashSet::new();
        let mut frontier = vec![identity(&wr2)];
        ball.insert(identity(&wr2));
        for _ in 0..3 {
            let mut next = Vec::new();
            for x in &frontier {
                for s in &symbols {
                    let y = multiply(&wr2, x, s).unwrap();
                    if ball.insert(y.clone()) {
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }

        // t · g · t⁻¹ places the base generator in the other coordinate.
        assert!(ball.contains(&el(&wr2, "(0, 1; 0)")));
        assert!(ball.contains(&el(&wr2, "(1, 0; 1)")));
        assert!(ball.contains(&el(&wr2, "(0, 0; -3)")));
        assert!(!ball.contains(&el(&wr2, "(1, 1; 0)")));
    }

    #[test]
    fn random_element_is_deterministic_and_bounded() {
        let word = w("(Z wr3 Z) x Z");
        let a = random_element(&word, 5, 42);
        let b = random_element(&word, 5, 42);
        assert_eq!(a, b);
        assert_ne!(a, random_element(&word, 5, 43));

        fn check_bounds(x: &Element, bound: i64) {
            match x {
                Element::Triv => {}
                Element::Int(k) => assert!(k.abs() <= bound),
                Element::Pair(l, r) => {
                    check_bounds(l, bound);
                    check_bounds(r, bound);
                }
                Element::Wreath { coords, shift } => {
                    assert!(shift.abs() <= bound);
                    coords.iter().for_each(|c| check_bounds(c, bound));
                }
            }
        }
        for seed in 0..200 {
            check_bounds(&random_element(&word, 5, seed), 5);
        }
    }

    #[test]
    fn random_element_mean_is_within_three_sigma() {
        let n = 10_000usize;
        let bound = 5i64;
        let mut sum = 0i64;
        for seed in 0..n {
            match random_element(&GroupWord::Zed, bound, seed as u64) {
                Element::Int(k) => sum += k,
                _ => unreachable!(),
            }
        }
        let mean = sum as f64 / n as f64;
        // Var of the discrete uniform on [-b, b] is b(b+1)/3.
        let sigma = ((bound * (bound + 1)) as f64 / 3.0 / n as f64).sqrt();
        assert!(
            mean.abs() <= 3.0 * sigma,
            "mean {mean} exceeds 3 sigma {}",
            3.0 * sigma
        );
    }

    #[test]
    fn parse_element_examples() {
        assert_eq!(el(&GroupWord::Zed, "7"), Element::Int(7));
        assert_eq!(
            el(&w("Z wr3 Z"), "(1,2,3; 4)"),
            Element::wreath(vec![Element::Int(1), Element::Int(2), Element::Int(3)], 4)
        );
        assert_eq!(
            el(&w("Z x Z"), "<1, 2>"),
            Element::pair(Element::Int(1), Element::Int(2))
        );
    }

    #[test]
    fn parse_element_rejects_bad_input() {
        let wr2 = w("Z wr2 Z");
        assert!(matches!(
            parse_element(&wr2, "(1, 2; )"),
            Err(ElementParseError::Syntax { .. })
        ));
        assert!(matches!(
            parse_element(&wr2, "(1, 2, 3; 0)"),
            Err(ElementParseError::ShapeMismatch { .. })
        ));
        assert!(matches!(
            parse_element(&GroupWord::Zed, "e"),
            Err(ElementParseError::ShapeMismatch { .. })
        ));
        assert!(matches!(
            parse_element(&GroupWord::Zed, "7 x"),
            Err(ElementParseError::Syntax { .. })
        ));
    }

    #[test]
    fn overflow_is_an_error() {
        let z = GroupWord::Zed;
        assert_eq!(
            multiply(&z, &Element::Int(i64::MAX), &Element::Int(1)),
            Err(ElementError::Overflow)
        );
        assert_eq!(
            inverse(&z, &Element::Int(i64::MIN)),
            Err(ElementError::Overflow)
        );
    }

    #[test]
    fn type_mismatch_is_an_error() {
        let wr2 = w("Z wr2 Z");
        let err = multiply(&wr2, &el(&wr2, "(1, 2; 0)"), &Element::Int(3)).unwrap_err();
        assert!(matches!(err, ElementError::TypeMismatch { .. }));
        assert!(inverse(&wr2, &Element::Triv).is_err());
    }

    /// Breadth sweep: every word shape up to length 5 with arities up to
    /// 4, a few triples each. The acceptance suite runs depth (10^4
    /// triples per word) on a smaller family.
    #[test]
    fn axioms_hold_across_the_length_5_family() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        for word in crate::word::enumerate_words(5, 4) {
            let e = identity(&word);
            for _ in 0..3 {
                let x = sample_element(&word, 4, &mut rng);
                let y = sample_element(&word, 4, &mut rng);
                let z = sample_element(&word, 4, &mut rng);
                let xy_z = multiply(&word, &multiply(&word, &x, &y).unwrap(), &z).unwrap();
                let x_yz = multiply(&word, &x, &multiply(&word, &y, &z).unwrap()).unwrap();
                assert_eq!(xy_z, x_yz, "associativity failed in {word}");
                assert_eq!(multiply(&word, &x, &e).unwrap(), x);
                assert_eq!(multiply(&word, &e, &x).unwrap(), x);
                let xi = inverse(&word, &x).unwrap();
                assert_eq!(multiply(&word, &x, &xi).unwrap(), e);
                assert_eq!(multiply(&word, &xi, &x).unwrap(), e);
            }
        }
    }

    proptest! {
        #[test]
        fn group_axioms_hold(word in arb_word(), seed in any::<u64>()) {
            let x = random_element(&word, 6, seed);
            let y = random_element(&word, 6, seed.wrapping_add(1));
            let z = random_element(&word, 6, seed.wrapping_add(2));
            let e = identity(&word);

            let xy_z = multiply(&word, &multiply(&word, &x, &y).unwrap(), &z).unwrap();
            let x_yz = multiply(&word, &x, &multiply(&word, &y, &z).unwrap()).unwrap();
            prop_assert_eq!(xy_z, x_yz);

            prop_assert_eq!(multiply(&word, &x, &e).unwrap(), x.clone());
            prop_assert_eq!(multiply(&word, &e, &x).unwrap(), x.clone());

            let xi = inverse(&word, &x).unwrap();
            prop_assert_eq!(multiply(&word, &x, &xi).unwrap(), e.clone());
            prop_assert_eq!(multiply(&word, &xi, &x).unwrap(), e);
        }

        #[test]
        fn element_print_parse_roundtrip(word in arb_word(), seed in any::<u64>()) {
            let x = random_element(&word, 9, seed);
            let text = print_element(&word, &x).unwrap();
            prop_assert_eq!(parse_element(&word, &text).unwrap(), x);
        }
    }
}
