//! The explicit (Z/3Z)^g torsion subgroup of Sp(2g, Z): block-diagonal
//! generators built from the order-3 matrix A = [[-1,-1],[1,0]], verified
//! exactly over the integers.

use crate::error::{Error, Result};
use serde::Serialize;
use std::collections::HashSet;

/// Dense integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    pub n: usize,
    pub data: Vec<i64>,
}

impl IntMatrix {
    pub fn zero(n: usize) -> Self {
        IntMatrix {
            n,
            data: vec![0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.n + j] = v;
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> IntMatrix {
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.data[j * n + i] = self.get(i, j);
            }
        }
        out
    }
}

/// The 2x2 order-3 block.
pub const BLOCK_A: [[i64; 2]; 2] = [[-1, -1], [1, 0]];

/// The standard symplectic form: block-diagonal copies of [[0,1],[-1,0]],
/// matching the 2x2-block layout of the generators.
pub fn standard_j(g: usize) -> IntMatrix {
    let mut j = IntMatrix::zero(2 * g);
    for b in 0..g {
        j.set(2 * b, 2 * b + 1, 1);
        j.set(2 * b + 1, 2 * b, -1);
    }
    j
}

/// Generator m_i (1-based i <= g): A in block i of a 2g x 2g block-diagonal
/// matrix, identity elsewhere.
pub fn torsion_block(i: usize, g: usize) -> Result<IntMatrix> {
    if i == 0 || i > g {
        return Err(Error::invalid(format!("block index {i} out of range 1..={g}")));
    }
    let mut m = IntMatrix::identity(2 * g);
    let o = 2 * (i - 1);
    for r in 0..2 {
        for c in 0..2 {
            m.set(o + r, o + c, BLOCK_A[r][c]);
        }
    }
    Ok(m)
}

#[derive(Clone, Debug, Serialize)]
pub struct SymplecticReport {
    pub schema: String,
    pub genus: usize,
    pub pass: bool,
    /// names of the identities verified
    pub checks: Vec<String>,
    pub group_order: usize,
}

/// Verify that m_1..m_g generate a (Z/3Z)^g subgroup of Sp(2g, Z):
/// symplectic (m^T J m = J), order 3, pairwise commuting, and all 3^g
/// products distinct.
pub fn verify_witness(g: usize) -> Result<SymplecticReport> {
    if g == 0 {
        return Err(Error::invalid("genus must be >= 1"));
    }
    if g > 8 {
        return Err(Error::resource("witness verification capped at g = 8"));
    }
    let j = standard_j(g);
    let id = IntMatrix::identity(2 * g);
    let ms: Vec<IntMatrix> = (1..=g).map(|i| torsion_block(i, g)).collect::<Result<_>>()?;
    let mut checks = Vec::new();
    for (i, m) in ms.iter().enumerate() {
        if m.transpose().mul(&j).mul(m) != j {
            return Err(Error::Verification(format!(
                "m_{} is not symplectic (m^T J m != J)",
                i + 1
            )));
        }
        if m.mul(m).mul(m) != id {
            return Err(Error::Verification(format!("m_{}^3 != I", i + 1)));
        }
        if m.mul(m) == id || *m == id {
            return Err(Error::Verification(format!("m_{} has order < 3", i + 1)));
        }
    }
    checks.push("m_i^T J m_i = J".into());
    checks.push("m_i^3 = I and m_i != I".into());
    for a in 0..g {
        for b in a + 1..g {
            if ms[a].mul(&ms[b]) != ms[b].mul(&ms[a]) {
                return Err(Error::Verification(format!(
                    "m_{} and m_{} do not commute",
                    a + 1,
                    b + 1
                )));
            }
        }
    }
    checks.push("[m_i, m_j] = I".into());
    // enumerate all exponent vectors and confirm the products are distinct
    let mut seen: HashSet<IntMatrix> = HashSet::new();
    let mut exps = vec![0u8; g];
    loop {
        let mut prod = IntMatrix::identity(2 * g);
        for (i, &e) in exps.iter().enumerate() {
            for _ in 0..e {
                prod = prod.mul(&ms[i]);
            }
        }
        if !seen.insert(prod) {
            return Err(Error::Verification(
                "exponent vectors give a repeated matrix".into(),
            ));
        }
        let mut i = 0;
        loop {
            if i == g {
                let order = seen.len();
                checks.push(format!("3^g = {order} distinct products"));
                return Ok(SymplecticReport {
                    schema: "torsion-obstruct/1".into(),
                    genus: g,
                    pass: true,
                    checks,
                    group_order: order,
                });
            }
            exps[i] += 1;
            if exps[i] < 3 {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn block_a_identities() {
        let a = torsion_block(1, 1).unwrap();
        // A^2 + A + I = 0
        let a2 = a.mul(&a);
        let mut sum = IntMatrix::zero(2);
        for i in 0..4 {
            sum.data[i] = a2.data[i] + a.data[i] + IntMatrix::identity(2).data[i];
        }
        assert_eq!(sum, IntMatrix::zero(2));
        assert_eq!(a.mul(&a).mul(&a), IntMatrix::identity(2));
    }

    #[test]
    fn block_placement() {
        let m = torsion_block(2, 3).unwrap();
        assert_eq!(m.n, 6);
        assert_eq!(m.get(2, 2), -1);
        assert_eq!(m.get(2, 3), -1);
        assert_eq!(m.get(3, 2), 1);
        assert_eq!(m.get(3, 3), 0);
        assert_eq!(m.get(0, 0), 1);
        assert_eq!(m.get(5, 5), 1);
        assert!(torsion_block(4, 3).is_err());
        assert!(torsion_block(0, 3).is_err());
    }

    #[test]
    fn witness_small_genera() {
        for g in 1..=4 {
            let rep = verify_witness(g).unwrap();
            assert!(rep.pass);
            assert_eq!(rep.group_order, 3usize.pow(g as u32));
        }
    }

    #[test]
    fn caps_and_bounds() {
        assert!(verify_witness(0).is_err());
        assert!(verify_witness(9).is_err());
    }
}
