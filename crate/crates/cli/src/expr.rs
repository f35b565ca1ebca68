//! Group-expression grammar: parsing, canonical printing, and construction.
//!
//! ```text
//! expr := term ("x" term)*
//! term := NAME "(" args ")" | NAME INT          (INT sugar for C/D/DC)
//! NAME := C | D | DC | SD | M | SG | P | BP | CP
//! ```
//!
//! Whitespace-insensitive. Parse errors carry a 1-based character position
//! and the set of tokens that would have been accepted. Cheap semantic
//! checks (bounds, primality, order conditions) are made while parsing so
//! the error can point at the offending argument; anything that needs the
//! group itself is deferred to [`GroupExpr::build`].

use std::fmt;
use std::path::{Path, PathBuf};

use torsion_obstruct::catalog;
use torsion_obstruct::fp::is_prime;
use torsion_obstruct::group::constructors::{
    central_product, direct_product, make_cyclic, make_dicyclic, make_dihedral, make_semidirect,
};
use torsion_obstruct::sphere::{MetacyclicParams, Orientation};
use torsion_obstruct::{Error, FiniteGroup, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupExpr {
    Cyclic(usize),
    Dihedral(usize),
    Dicyclic(usize),
    /// C_n ⋊ C_k with the generator acting as multiplication by r
    Semidirect(usize, usize, usize),
    /// split metacyclic C_p ⋊ C_q, p prime, q | p − 1, faithful action
    Metacyclic(usize, usize),
    DirectProduct(Box<GroupExpr>, Box<GroupExpr>),
    /// central product identifying the given involution of each factor
    CentralProduct(Box<GroupExpr>, usize, Box<GroupExpr>, usize),
    /// small-group catalog entry (order, id)
    Catalog(usize, usize),
    /// presentation fixture: bundled name, or a path to a `.pres` file
    Presented(String),
    /// binary polyhedral group: 2T, 2O, or 2I
    BinaryPolyhedral(String),
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Cyclic(n) => write!(f, "C{n}"),
            GroupExpr::Dihedral(n) => write!(f, "D{n}"),
            GroupExpr::Dicyclic(n) => write!(f, "DC{n}"),
            GroupExpr::Semidirect(n, k, r) => write!(f, "SD({n},{k},{r})"),
            GroupExpr::Metacyclic(p, q) => write!(f, "M({p},{q})"),
            GroupExpr::DirectProduct(l, r) => write!(f, "{l} x {r}"),
            GroupExpr::CentralProduct(l, zl, r, zr) => write!(f, "CP({l},{zl},{r},{zr})"),
            GroupExpr::Catalog(o, i) => write!(f, "SG({o},{i})"),
            GroupExpr::Presented(name) => write!(f, "P({name})"),
            GroupExpr::BinaryPolyhedral(tag) => write!(f, "BP({tag})"),
        }
    }
}

/// Parse an expression, consuming the entire input.
pub fn parse_group(text: &str) -> Result<GroupExpr> {
    let mut p = Parser {
        chars: text.chars().collect(),
        i: 0,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.i < p.chars.len() {
        return Err(p.err("expected 'x', or end of input"));
    }
    Ok(e)
}

struct Parser {
    chars: Vec<char>,
    i: usize,
}

impl Parser {
    /// 1-based position of the next unread character.
    fn pos(&self) -> usize {
        self.i + 1
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos(),
            msg: msg.into(),
        }
    }

    fn err_at(&self, pos: usize, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.i < self.chars.len() && self.chars[self.i].is_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.i).copied()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.i += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected '{c}'")))
        }
    }

    fn integer(&mut self) -> Result<(usize, usize)> {
        self.skip_ws();
        let start = self.pos();
        let mut digits = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_digit() {
                digits.push(c);
                self.i += 1;
            } else {
                break;
            }
        }
        if digits.is_empty() {
            return Err(self.err("expected integer"));
        }
        let v: usize = digits
            .parse()
            .map_err(|_| self.err_at(start, "integer out of range"))?;
        Ok((v, start))
    }

    /// Uppercase-letter run (a group-constructor name).
    fn name(&mut self) -> Result<(String, usize)> {
        self.skip_ws();
        let start = self.pos();
        let mut s = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_uppercase() {
                s.push(c);
                self.i += 1;
            } else {
                break;
            }
        }
        if s.is_empty() {
            return Err(self.err(
                "expected group name (one of C, D, DC, SD, M, SG, P, BP, CP)",
            ));
        }
        Ok((s, start))
    }

    /// Free-form argument for P(...): anything up to ',' or ')'.
    fn raw_arg(&mut self) -> Result<String> {
        self.skip_ws();
        let mut s = String::new();
        while let Some(c) = self.peek() {
            if c == ')' || c == ',' {
                break;
            }
            s.push(c);
            self.i += 1;
        }
        let s = s.trim().to_string();
        if s.is_empty() {
            return Err(self.err("expected fixture name or path"));
        }
        Ok(s)
    }

    fn int_args(&mut self, n: usize) -> Result<Vec<(usize, usize)>> {
        self.expect('(')?;
        let mut out = Vec::with_capacity(n);
        for j in 0..n {
            if j > 0 {
                self.expect(',')?;
            }
            out.push(self.integer()?);
        }
        self.expect(')')?;
        Ok(out)
    }

    fn expr(&mut self) -> Result<GroupExpr> {
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            // lowercase 'x' is the direct-product operator
            if self.peek() == Some('x') {
                self.i += 1;
                let rhs = self.term()?;
                acc = GroupExpr::DirectProduct(Box::new(acc), Box::new(rhs));
            } else {
                return Ok(acc);
            }
        }
    }

    /// Single-integer argument, either parenthesized or as a bare suffix
    /// (the `C4` sugar).
    fn one_int(&mut self) -> Result<(usize, usize)> {
        self.skip_ws();
        if self.peek() == Some('(') {
            Ok(self.int_args(1)?[0])
        } else if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.integer()
        } else {
            Err(self.err("expected '(' or integer"))
        }
    }

    fn term(&mut self) -> Result<GroupExpr> {
        let (name, start) = self.name()?;
        match name.as_str() {
            "C" => {
                let (n, _) = self.one_int()?;
                if n == 0 {
                    return Err(self.err_at(start, "n >= 1 required"));
                }
                Ok(GroupExpr::Cyclic(n))
            }
            "D" => {
                let (n, _) = self.one_int()?;
                if n == 0 {
                    return Err(self.err_at(start, "n >= 1 required"));
                }
                Ok(GroupExpr::Dihedral(n))
            }
            "DC" => {
                let (n, _) = self.one_int()?;
                if n < 2 {
                    return Err(self.err_at(start, "n >= 2 required"));
                }
                Ok(GroupExpr::Dicyclic(n))
            }
            "SD" => {
                let args = self.int_args(3)?;
                let ((n, pn), (k, pk), (r, pr)) = (args[0], args[1], args[2]);
                if n < 2 {
                    return Err(self.err_at(pn, "n >= 2 required"));
                }
                if k == 0 {
                    return Err(self.err_at(pk, "k >= 1 required"));
                }
                if r == 0 || r >= n || gcd(r, n) != 1 {
                    return Err(self.err_at(pr, "r must be a unit modulo n"));
                }
                if pow_mod(r, k, n) != 1 {
                    return Err(self.err_at(pr, format!("r^k must be 1 modulo {n}")));
                }
                Ok(GroupExpr::Semidirect(n, k, r))
            }
            "M" => {
                let args = self.int_args(2)?;
                let ((p, pp), (q, pq)) = (args[0], args[1]);
                if !is_prime(p as u64) {
                    return Err(self.err_at(pp, "p must be prime"));
                }
                if q < 2 || (p - 1) % q != 0 {
                    return Err(self.err_at(pq, "q must divide p - 1 and be at least 2"));
                }
                Ok(GroupExpr::Metacyclic(p, q))
            }
            "SG" => {
                let args = self.int_args(2)?;
                Ok(GroupExpr::Catalog(args[0].0, args[1].0))
            }
            "P" => {
                self.expect('(')?;
                let arg = self.raw_arg()?;
                self.expect(')')?;
                Ok(GroupExpr::Presented(arg))
            }
            "BP" => {
                self.expect('(')?;
                let pos = {
                    self.skip_ws();
                    self.pos()
                };
                let tag = self.bp_tag()?;
                self.expect(')')?;
                if !matches!(tag.as_str(), "2T" | "2O" | "2I") {
                    return Err(self.err_at(pos, "expected one of 2T, 2O, 2I"));
                }
                Ok(GroupExpr::BinaryPolyhedral(tag))
            }
            "CP" => {
                self.expect('(')?;
                let l = self.expr()?;
                self.expect(',')?;
                let (zl, _) = self.integer()?;
                self.expect(',')?;
                let r = self.expr()?;
                self.expect(',')?;
                let (zr, _) = self.integer()?;
                self.expect(')')?;
                Ok(GroupExpr::CentralProduct(Box::new(l), zl, Box::new(r), zr))
            }
            other => Err(self.err_at(
                start,
                format!("unknown group name '{other}' (expected C, D, DC, SD, M, SG, P, BP, CP)"),
            )),
        }
    }

    /// Binary polyhedral tag: alphanumeric run like `2T`.
    fn bp_tag(&mut self) -> Result<String> {
        self.skip_ws();
        let mut s = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() {
                s.push(c);
                self.i += 1;
            } else {
                break;
            }
        }
        if s.is_empty() {
            return Err(self.err("expected one of 2T, 2O, 2I"));
        }
        Ok(s)
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn pow_mod(mut base: usize, mut exp: usize, m: usize) -> usize {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

impl GroupExpr {
    /// Build the group, enforcing the order cap on the final result.
    pub fn build(&self, cap: usize) -> Result<FiniteGroup> {
        let g = self.build_inner()?;
        if g.order() > cap {
            return Err(Error::resource(format!(
                "group order {} exceeds cap {cap}",
                g.order()
            )));
        }
        Ok(g)
    }

    fn build_inner(&self) -> Result<FiniteGroup> {
        match self {
            GroupExpr::Cyclic(n) => make_cyclic(*n),
            GroupExpr::Dihedral(n) => make_dihedral(*n),
            GroupExpr::Dicyclic(n) => make_dicyclic(*n),
            GroupExpr::Semidirect(n, k, r) => make_semidirect(*n, *k, *r),
            GroupExpr::Metacyclic(p, q) => {
                MetacyclicParams::effective(*p, *q, Orientation::Any)?.group()
            }
            GroupExpr::DirectProduct(l, r) => {
                direct_product(&l.build_inner()?, &r.build_inner()?)
            }
            GroupExpr::CentralProduct(l, zl, r, zr) => {
                central_product(&l.build_inner()?, *zl, &r.build_inner()?, *zr)
            }
            GroupExpr::Catalog(o, i) => catalog::small_group(*o, *i),
            GroupExpr::Presented(arg) => {
                let (dir, name) = resolve_fixture(arg)?;
                catalog::load_fixture(&dir, &name)
            }
            GroupExpr::BinaryPolyhedral(tag) => match tag.as_str() {
                "2T" => catalog::binary_tetrahedral(),
                "2O" => catalog::binary_octahedral(),
                "2I" => catalog::binary_icosahedral(),
                _ => Err(Error::invalid(format!("unknown binary polyhedral tag {tag}"))),
            },
        }
    }
}

/// A bare name refers to the bundled fixture directory; anything with a
/// path separator is resolved as `<dir>/<name>.pres` against that
/// directory's own manifest.
fn resolve_fixture(arg: &str) -> Result<(PathBuf, String)> {
    if arg.contains('/') || arg.contains('\\') {
        let path = Path::new(arg);
        let dir = path
            .parent()
            .filter(|d| !d.as_os_str().is_empty())
            .ok_or_else(|| Error::invalid(format!("cannot resolve fixture path {arg}")))?;
        let name = path
            .file_stem()
            .and_then(|s| s.to_str())
            .ok_or_else(|| Error::invalid(format!("cannot resolve fixture name in {arg}")))?;
        Ok((dir.to_path_buf(), name.to_string()))
    } else {
        Ok((catalog::bundled_fixture_dir(), arg.to_string()))
    }
}
