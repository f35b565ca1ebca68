//! Finite presentations and their text format.
//!
//! File format: first line `gens k`; each subsequent non-empty line is one
//! relator, written as whitespace-separated letters `a..z` (generators 0..)
//! with uppercase meaning the inverse, optionally with an exponent, e.g.
//!
//! ```text
//! gens 2
//! a^4
//! b^4
//! B a b a
//! ```

use crate::error::{Error, Result};

/// A signed generator index: `+i` for generator i, `-(i+1)` for its inverse.
pub type Letter = i32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub num_generators: usize,
    pub relators: Vec<Vec<Letter>>,
}

impl Presentation {
    pub fn new(num_generators: usize, relators: Vec<Vec<Letter>>) -> Result<Self> {
        if num_generators == 0 || num_generators > 26 {
            return Err(Error::invalid("presentations support 1..=26 generators"));
        }
        for r in &relators {
            if r.is_empty() {
                return Err(Error::invalid("empty relator"));
            }
            for &l in r {
                let idx = letter_gen(l);
                if idx >= num_generators {
                    return Err(Error::invalid("relator uses undeclared generator"));
                }
            }
        }
        Ok(Presentation {
            num_generators,
            relators,
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::invalid("empty presentation file"))?;
        let mut parts = header.split_whitespace();
        if parts.next() != Some("gens") {
            return Err(Error::invalid("presentation must start with `gens k`"));
        }
        let k: usize = parts
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::invalid("bad generator count"))?;
        let mut relators = Vec::new();
        for line in lines {
            let mut word = Vec::new();
            for tok in line.split_whitespace() {
                let (letter_part, exp) = match tok.split_once('^') {
                    Some((l, e)) => {
                        let e: i64 = e
                            .parse()
                            .map_err(|_| Error::invalid(format!("bad exponent in `{tok}`")))?;
                        (l, e)
                    }
                    None => (tok, 1),
                };
                if letter_part.len() != 1 {
                    return Err(Error::invalid(format!("bad token `{tok}`")));
                }
                let c = letter_part.chars().next().unwrap();
                let base: Letter = if c.is_ascii_lowercase() {
                    (c as u8 - b'a') as Letter + 1
                } else if c.is_ascii_uppercase() {
                    -((c as u8 - b'A') as Letter + 1)
                } else {
                    return Err(Error::invalid(format!("bad generator `{c}`")));
                };
                let (letter, reps) = if exp < 0 { (-base, -exp) } else { (base, exp) };
                for _ in 0..reps {
                    // stored 0-based signed: +i+1 / -(i+1) convention internally
                    word.push(if letter > 0 { letter - 1 } else { letter });
                }
            }
            if !word.is_empty() {
                relators.push(word);
            }
        }
        // normalize: letters are `gen` as 0.. and inverse as -(gen+1)
        Presentation::new(k, relators)
    }
}

/// Generator index of a letter.
pub fn letter_gen(l: Letter) -> usize {
    if l >= 0 {
        l as usize
    } else {
        (-l - 1) as usize
    }
}

/// True if the letter denotes an inverse.
pub fn letter_inv(l: Letter) -> bool {
    l < 0
}
