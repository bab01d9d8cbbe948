//! Presentation words in the alphabet `{1, Z, x, wrN}`.
//!
//! Grammar (whitespace between tokens is insignificant):
//!
//! ```text
//! word := term ( "x" term )*
//! term := atom ( "wr" INT "Z" )*
//! atom := "1" | "Z" | "(" word ")"
//! ```
//!
//! `x` is left-associative, `wr` binds tighter than `x`, and `INT >= 1`.
//! A word names a group: `1` the trivial group, `Z` the integers, `a x b`
//! the direct product, and `a wrN Z` the wreath product `a^N ⋊ Z` where `Z`
//! acts by cyclic shifts of coordinates.

use std::fmt;

use thiserror::Error;

/// AST of a presentation word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupWord {
    /// The trivial group, written `1`.
    Triv,
    /// The infinite cyclic group, written `Z`.
    Zed,
    /// Direct product, written `a x b`.
    Prod(Box<GroupWord>, Box<GroupWord>),
    /// Wreath product `base wrN Z` with arity `N >= 1`.
    Wreath(Box<GroupWord>, usize),
}

impl GroupWord {
    pub fn prod(left: GroupWord, right: GroupWord) -> GroupWord {
        GroupWord::Prod(Box::new(left), Box::new(right))
    }

    /// Panics if `arity == 0`; `wr1 Z` is allowed and names `base x Z`.
    pub fn wreath(base: GroupWord, arity: usize) -> GroupWord {
        assert!(arity >= 1, "wreath arity must be at least 1");
        GroupWord::Wreath(Box::new(base), arity)
    }

    /// Number of `Z` symbols in the word (each `wrN Z` contributes one).
    ///
    /// This is the first Betti number of the presented group: the rank of
    /// both its center and its abelianization.
    pub fn beta1(&self) -> usize {
        match self {
            GroupWord::Triv => 0,
            GroupWord::Zed => 1,
            GroupWord::Prod(l, r) => l.beta1() + r.beta1(),
            GroupWord::Wreath(b, _) => b.beta1() + 1,
        }
    }

    /// Number of `1` and `Z` symbols in the word (each `wrN Z` contributes
    /// one `Z`).
    pub fn length(&self) -> usize {
        match self {
            GroupWord::Triv | GroupWord::Zed => 1,
            GroupWord::Prod(l, r) => l.length() + r.length(),
            GroupWord::Wreath(b, _) => b.length() + 1,
        }
    }

    /// Applies the iso-preserving rewrites
    /// `1 wrN Z -> Z`, `a wr1 Z -> a x Z`, `1 x a -> a`, `a x 1 -> a`
    /// to fixpoint. The result contains no such redex and has the same
    /// `beta1`. Words are never normalized implicitly.
    pub fn normalize(&self) -> GroupWord {
        match self {
            GroupWord::Triv => GroupWord::Triv,
            GroupWord::Zed => GroupWord::Zed,
            GroupWord::Prod(l, r) => {
                let l = l.normalize();
                let r = r.normalize();
                if l == GroupWord::Triv {
                    r
                } else if r == GroupWord::Triv {
                    l
                } else {
                    GroupWord::prod(l, r)
                }
            }
            GroupWord::Wreath(b, n) => {
                let b = b.normalize();
                if b == GroupWord::Triv {
                    GroupWord::Zed
                } else if *n == 1 {
                    // b is normalized and non-trivial, so b x Z is a normal form.
                    GroupWord::prod(b, GroupWord::Zed)
                } else {
                    GroupWord::wreath(b, *n)
                }
            }
        }
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupWord::Triv => f.write_str("1"),
            GroupWord::Zed => f.write_str("Z"),
            GroupWord::Prod(l, r) => {
                // `x` is left-associative: the left operand never needs
                // parentheses, the right one does when it is itself a product.
                write!(f, "{} x ", l)?;
                if matches!(**r, GroupWord::Prod(..)) {
                    write!(f, "({})", r)
                } else {
                    write!(f, "{}", r)
                }
            }
            GroupWord::Wreath(b, n) => {
                if matches!(**b, GroupWord::Prod(..)) {
                    write!(f, "({})", b)?;
                } else {
                    write!(f, "{}", b)?;
                }
                write!(f, " wr{} Z", n)
            }
        }
    }
}

/// Renders a word in the concrete grammar; `parse_word(print_word(w)) == w`.
pub fn print_word(w: &GroupWord) -> String {
    w.to_string()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at byte {pos}: {message}")]
pub struct WordParseError {
    pub pos: usize,
    pub message: String,
}

impl WordParseError {
    fn new(pos: usize, message: impl Into<String>) -> Self {
        WordParseError {
            pos,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    One,
    Zed,
    Times,
    Wr(usize),
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(Token, usize)>, WordParseError> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '1' => {
                tokens.push((Token::One, i));
                i += 1;
            }
            'Z' => {
                tokens.push((Token::Zed, i));
                i += 1;
            }
            'x' => {
                tokens.push((Token::Times, i));
                i += 1;
            }
            '(' => {
                tokens.push((Token::LParen, i));
                i += 1;
            }
            ')' => {
                tokens.push((Token::RParen, i));
                i += 1;
            }
            'w' => {
                let start = i;
                if !text[i..].starts_with("wr") {
                    return Err(WordParseError::new(i, "expected `wr`"));
                }
                i += 2;
                let digits_start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if digits_start == i {
                    return Err(WordParseError::new(i, "expected arity after `wr`"));
                }
                let arity: usize = text[digits_start..i]
                    .parse()
                    .map_err(|_| WordParseError::new(digits_start, "arity out of range"))?;
                if arity < 1 {
                    return Err(WordParseError::new(
                        digits_start,
                        "wreath arity must be at least 1",
                    ));
                }
                tokens.push((Token::Wr(arity), start));
            }
            _ => {
                return Err(WordParseError::new(
                    i,
                    format!("unexpected character `{c}`"),
                ));
            }
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(_, p)| *p)
            .unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Token, what: &str) -> Result<(), WordParseError> {
        let pos = self.here();
        match self.bump() {
            Some(t) if t == want => Ok(()),
            _ => Err(WordParseError::new(pos, format!("expected {what}"))),
        }
    }

    // word := term ( "x" term )*
    fn word(&mut self) -> Result<GroupWord, WordParseError> {
        let mut acc = self.term()?;
        while self.peek() == Some(&Token::Times) {
            self.bump();
            let rhs = self.term()?;
            acc = GroupWord::prod(acc, rhs);
        }
        Ok(acc)
    }

    // term := atom ( "wr" INT "Z" )*
    fn term(&mut self) -> Result<GroupWord, WordParseError> {
        let mut acc = self.atom()?;
        while let Some(Token::Wr(n)) = self.peek() {
            let n = *n;
            self.bump();
            self.expect(Token::Zed, "`Z` after wreath arity")?;
            acc = GroupWord::wreath(acc, n);
        }
        Ok(acc)
    }

    // atom := "1" | "Z" | "(" word ")"
    fn atom(&mut self) -> Result<GroupWord, WordParseError> {
        let pos = self.here();
        match self.bump() {
            Some(Token::One) => Ok(GroupWord::Triv),
            Some(Token::Zed) => Ok(GroupWord::Zed),
            Some(Token::LParen) => {
                let inner = self.word()?;
                self.expect(Token::RParen, "`)`")?;
                Ok(inner)
            }
            _ => Err(WordParseError::new(pos, "expected `1`, `Z` or `(`")),
        }
    }
}

/// Parses the concrete word grammar into its unique AST.
pub fn parse_word(text: &str) -> Result<GroupWord, WordParseError> {
    let tokens = lex(text)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        end: text.len(),
    };
    let word = parser.word()?;
    if parser.pos != parser.tokens.len() {
        return Err(WordParseError::new(
            parser.here(),
            "unexpected trailing input",
        ));
    }
    Ok(word)
}

/// All words with `length() <= max_length` and every wreath arity
/// `<= max_arity`, each exactly once, in a deterministic order: by length,
/// then all products (split point ascending), then all wreaths (arity
/// ascending).
pub fn enumerate_words(max_length: usize, max_arity: usize) -> Vec<GroupWord> {
    assert!(max_length >= 1 && max_arity >= 1);
    // by_length[l] holds the words of length l + 1.
    let mut by_length: Vec<Vec<GroupWord>> = vec![vec![GroupWord::Triv, GroupWord::Zed]];
    for len in 2..=max_length {
        let mut batch = Vec::new();
        for left_len in 1..len {
            for a in &by_length[left_len - 1] {
                for b in &by_length[len - left_len - 1] {
                    batch.push(GroupWord::prod(a.clone(), b.clone()));
                }
            }
        }
        for base in &by_length[len - 2] {
            for arity in 1..=max_arity {
                batch.push(GroupWord::wreath(base.clone(), arity));
            }
        }
        by_length.push(batch);
    }
    by_length.into_iter().flatten().collect()
}
