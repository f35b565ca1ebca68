//! Exact arithmetic in the ring of integers Z[zeta_m] of the m-th cyclotomic
//! field, in the power basis `1, zeta, .., zeta^{phi(m)-1}`. All verdict
//! paths that consume character values go through this module; there is no
//! floating point anywhere.

use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

#[derive(Debug)]
struct FieldData {
    phi: usize,
    /// monic cyclotomic polynomial Phi_m, coefficients low-to-high
    phi_poly: Vec<i128>,
}

fn field_cache() -> &'static Mutex<HashMap<usize, Arc<FieldData>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<FieldData>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn field(m: usize) -> Arc<FieldData> {
    if let Some(f) = field_cache().lock().unwrap().get(&m) {
        return f.clone();
    }
    let poly = cyclotomic_poly(m);
    let data = Arc::new(FieldData {
        phi: poly.len() - 1,
        phi_poly: poly,
    });
    field_cache()
        .lock()
        .unwrap()
        .entry(m)
        .or_insert(data)
        .clone()
}

/// Integer coefficients of Phi_m, computed by exact division of x^m - 1 by
/// the cyclotomic polynomials of the proper divisors of m.
fn cyclotomic_poly(m: usize) -> Vec<i128> {
    assert!(m >= 1);
    let mut f = vec![0i128; m + 1];
    f[0] = -1;
    f[m] = 1;
    for d in 1..m {
        if m % d == 0 {
            let phi_d = field(d).phi_poly.clone();
            f = int_poly_div_exact(&f, &phi_d);
        }
    }
    f
}

fn int_poly_div_exact(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    assert_eq!(b[db], 1, "divisor must be monic");
    let mut q = vec![0i128; r.len() - db];
    for i in (db..r.len()).rev() {
        let c = r[i];
        if c != 0 {
            q[i - db] = c;
            for j in 0..=db {
                r[i - db + j] -= c * b[j];
            }
        }
    }
    assert!(r.iter().all(|&x| x == 0), "inexact polynomial division");
    q
}

/// An element of Z[zeta_m] in canonical reduced form: `coeffs[i]` multiplies
/// `zeta_m^i`, `i < phi(m)`, reduced modulo Phi_m. Zero has empty support.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Cyclotomic {
    pub conductor: usize,
    pub coeffs: Vec<i128>,
}

impl Cyclotomic {
    pub fn zero(m: usize) -> Self {
        let phi = field(m).phi;
        Cyclotomic {
            conductor: m,
            coeffs: vec![0; phi],
        }
    }

    pub fn one(m: usize) -> Self {
        Self::integer(m, 1)
    }

    pub fn integer(m: usize, v: i128) -> Self {
        let mut z = Self::zero(m);
        if z.coeffs.is_empty() {
            z.coeffs = vec![0]; // m=1 edge: phi(1)=1, never empty in practice
        }
        z.coeffs[0] = v;
        z
    }

    /// zeta_m^k
    pub fn root_power(m: usize, k: usize) -> Self {
        let k = k % m;
        let mut raw = vec![0i128; m.max(1)];
        raw[k] = 1;
        Self::reduce(m, raw)
    }

    fn reduce(m: usize, mut raw: Vec<i128>) -> Self {
        let fd = field(m);
        // first fold exponents mod m (zeta^m = 1)
        if raw.len() > m {
            for i in (m..raw.len()).rev() {
                let c = raw[i];
                if c != 0 {
                    raw[i] = 0;
                    raw[i % m] += c;
                }
            }
            raw.truncate(m);
        }
        // then reduce modulo Phi_m
        let db = fd.phi;
        for i in (db..raw.len()).rev() {
            let c = raw[i];
            if c != 0 {
                raw[i] = 0;
                for j in 0..db {
                    raw[i - db + j] -= c * fd.phi_poly[j];
                }
            }
        }
        raw.resize(db, 0);
        Cyclotomic {
            conductor: m,
            coeffs: raw,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// `Some(v)` iff the element is the rational integer `v`.
    pub fn as_integer(&self) -> Option<i128> {
        if self.coeffs[1..].iter().all(|&c| c == 0) {
            Some(self.coeffs[0])
        } else {
            None
        }
    }

    pub fn add(&self, other: &Cyclotomic) -> Cyclotomic {
        assert_eq!(self.conductor, other.conductor);
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Cyclotomic) -> Cyclotomic {
        assert_eq!(self.conductor, other.conductor);
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, k: i128) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|a| a * k).collect(),
        }
    }

    pub fn mul(&self, other: &Cyclotomic) -> Cyclotomic {
        assert_eq!(self.conductor, other.conductor);
        let mut raw = vec![0i128; self.coeffs.len() + other.coeffs.len()];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                raw[i + j] += a * b;
            }
        }
        Self::reduce(self.conductor, raw)
    }

    /// Complex conjugation, zeta -> zeta^{-1}.
    pub fn conj(&self) -> Cyclotomic {
        let m = self.conductor;
        let mut raw = vec![0i128; m.max(1)];
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                raw[(m - i) % m] += c;
            }
        }
        Self::reduce(m, raw)
    }

    /// Galois action zeta -> zeta^t, gcd(t, m) = 1.
    pub fn galois(&self, t: usize) -> Cyclotomic {
        let m = self.conductor;
        let mut raw = vec![0i128; m.max(1)];
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                raw[(i * t) % m] += c;
            }
        }
        Self::reduce(m, raw)
    }

    /// Exact division by a rational integer; errors if not divisible.
    pub fn div_exact(&self, k: i128) -> Option<Cyclotomic> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for &c in &self.coeffs {
            if c % k != 0 {
                return None;
            }
            out.push(c / k);
        }
        Some(Cyclotomic {
            conductor: self.conductor,
            coeffs: out,
        })
    }
}

pub fn euler_phi(m: usize) -> usize {
    field(m).phi
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polys() {
        assert_eq!(field(1).phi_poly, vec![-1, 1]);
        assert_eq!(field(2).phi_poly, vec![1, 1]);
        assert_eq!(field(3).phi_poly, vec![1, 1, 1]);
        assert_eq!(field(4).phi_poly, vec![1, 0, 1]);
        assert_eq!(field(6).phi_poly, vec![1, -1, 1]);
        assert_eq!(field(12).phi_poly, vec![1, 0, -1, 0, 1]);
        assert_eq!(euler_phi(105), 48);
        // Phi_105 famously has a coefficient of -2
        assert!(field(105).phi_poly.iter().any(|&c| c == -2));
    }

    #[test]
    fn roots_of_unity_sum_to_zero() {
        for m in [2usize, 3, 4, 5, 6, 8, 12, 15] {
            let mut s = Cyclotomic::zero(m);
            for k in 0..m {
                s = s.add(&Cyclotomic::root_power(m, k));
            }
            assert!(s.is_zero(), "sum of all {m}-th roots of unity");
        }
    }

    #[test]
    fn multiplication_matches_exponent_addition() {
        let m = 20;
        for a in 0..m {
            for b in 0..m {
                let lhs = Cyclotomic::root_power(m, a).mul(&Cyclotomic::root_power(m, b));
                let rhs = Cyclotomic::root_power(m, (a + b) % m);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn conjugation_is_inverse_power() {
        let m = 24;
        for k in 0..m {
            assert_eq!(
                Cyclotomic::root_power(m, k).conj(),
                Cyclotomic::root_power(m, (m - k) % m)
            );
        }
        // z * conj(z) = 1 for roots of unity
        let z = Cyclotomic::root_power(m, 7);
        assert_eq!(z.mul(&z.conj()), Cyclotomic::one(m));
    }

    #[test]
    fn integer_detection() {
        let m = 5;
        // 1 + z + z^2 + z^3 + z^4 = 0, so z + z^2 + z^3 + z^4 = -1
        let mut s = Cyclotomic::zero(m);
        for k in 1..5 {
            s = s.add(&Cyclotomic::root_power(m, k));
        }
        assert_eq!(s.as_integer(), Some(-1));
        assert_eq!(Cyclotomic::root_power(m, 1).as_integer(), None);
    }
}
