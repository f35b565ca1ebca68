//! Dixon's modular algorithm: compute the character table over F_p for a
//! prime p ≡ 1 (mod exponent) with p > 2|G|, then lift the values exactly.
//!
//! The central characters omega_i = |C_i| chi(g_i) / chi(1) are the common
//! eigenvectors of the class-multiplication matrices; we split the common
//! eigenspaces one class matrix at a time (a deterministic, guaranteed
//! procedure because the class algebra is commutative and semisimple mod p).

use super::Character;
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::fp::{self, charpoly, kernel_basis, mat_vec, poly_roots, Fp, Mat};
use crate::group::conjugacy::ConjugacyData;
use crate::group::FiniteGroup;

pub fn irreducible_characters(
    g: &FiniteGroup,
    classes: &ConjugacyData,
    conductor: usize,
) -> Result<Vec<Character>> {
    let k = classes.num_classes();
    let n = g.order() as u64;
    let e = conductor as u64;
    let p = fp::prime_in_progression(e, 2 * n);
    let f = Fp::new(p);

    // class matrices: mats[i][l][m] = #{x in C_i : x^{-1} z_m in C_l}, so
    // that (mats[i] . omega)_l = omega_i * omega_l for every irreducible.
    let mats: Vec<Mat> = (0..k)
        .map(|i| {
            let mut b = vec![vec![0u64; k]; k];
            for (m, &zm) in classes.reps.iter().enumerate() {
                for &x in &classes.classes[i] {
                    let l = classes.class_of[g.mul(g.inv(x), zm)];
                    b[l][m] += 1;
                }
            }
            b
        })
        .collect();

    // split the common eigenspaces
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..k)
        .map(|i| {
            let mut v = vec![0u64; k];
            v[i] = 1;
            v
        })
        .collect()];
    for mat in mats.iter().skip(1) {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for basis in spaces {
            if basis.len() == 1 {
                next.push(basis);
                continue;
            }
            let images: Vec<Vec<u64>> = basis.iter().map(|v| mat_vec(&f, mat, v)).collect();
            let r = restricted_matrix(&f, &basis, &images)?;
            let d = r.len();
            for lambda in poly_roots(&f, &charpoly(&f, &r)) {
                let mut shifted = r.clone();
                for (idx, row) in shifted.iter_mut().enumerate().take(d) {
                    row[idx] = f.sub(row[idx], lambda);
                }
                let ker = kernel_basis(&f, &shifted);
                if ker.is_empty() {
                    continue;
                }
                let sub: Vec<Vec<u64>> = ker
                    .iter()
                    .map(|coeffs| {
                        let mut v = vec![0u64; k];
                        for (s, &c) in coeffs.iter().enumerate() {
                            if c != 0 {
                                for (vi, &bi) in v.iter_mut().zip(&basis[s]) {
                                    *vi = f.add(*vi, f.mul(c, bi));
                                }
                            }
                        }
                        v
                    })
                    .collect();
                next.push(sub);
            }
        }
        spaces = next;
    }
    if spaces.len() != k || spaces.iter().any(|s| s.len() != 1) {
        return Err(Error::internal(
            "class algebra eigenspaces did not split into lines",
        ));
    }

    // central characters, normalized by the identity-class coordinate
    let class_size_inv: Vec<u64> = classes.sizes.iter().map(|&s| f.inv(s as u64)).collect();
    let inv_class: Vec<usize> = (0..k).map(|l| classes.inverse_class(g, l)).collect();
    let w = fp::primitive_root(p);

    let mut rows: Vec<Character> = Vec::with_capacity(k);
    for space in &spaces {
        let v = &space[0];
        if v[0] == 0 {
            return Err(Error::internal("eigenvector vanishes on the identity class"));
        }
        let norm = f.inv(v[0]);
        let omega: Vec<u64> = v.iter().map(|&x| f.mul(x, norm)).collect();
        // degree from <chi, chi> = 1
        let mut s = 0u64;
        for l in 0..k {
            s = f.add(s, f.mul(f.mul(omega[l], omega[inv_class[l]]), class_size_inv[l]));
        }
        let d2 = f.mul(n % p, f.inv(s));
        let d = (d2 as f64).sqrt().round() as u64;
        let d = [d.saturating_sub(1), d, d + 1]
            .into_iter()
            .find(|&c| c * c == d2)
            .ok_or_else(|| Error::internal("squared degree is not a perfect square"))?;
        let chi_mod: Vec<u64> = (0..k)
            .map(|l| f.mul(f.mul(d % p, omega[l]), class_size_inv[l]))
            .collect();
        // lift each value through the eigenvalue multiplicities of rho(g_l)
        let values = (0..k)
            .map(|l| lift_value(g, classes, &f, w, &chi_mod, l, d, conductor))
            .collect::<Result<Vec<_>>>()?;
        rows.push(Character {
            degree: d as usize,
            values,
        });
    }
    let total: usize = rows.iter().map(|r| r.degree * r.degree).sum();
    if total != g.order() {
        return Err(Error::internal("degrees do not satisfy sum of squares"));
    }
    rows.sort_by(|a, b| {
        (a.degree, sort_key(a)).cmp(&(b.degree, sort_key(b)))
    });
    Ok(rows)
}

fn sort_key(c: &Character) -> Vec<Vec<i128>> {
    c.values.iter().map(|v| v.coeffs.clone()).collect()
}

/// Coordinates of each image vector in the given basis; returns the matrix
/// of the restricted operator (columns = coordinates of images).
fn restricted_matrix(f: &Fp, basis: &[Vec<u64>], images: &[Vec<u64>]) -> Result<Mat> {
    let k = basis[0].len();
    let d = basis.len();
    // augmented system [basis columns | image columns]
    let mut a = vec![vec![0u64; d + images.len()]; k];
    for (s, v) in basis.iter().enumerate() {
        for (row, &x) in v.iter().enumerate() {
            a[row][s] = x;
        }
    }
    for (t, v) in images.iter().enumerate() {
        for (row, &x) in v.iter().enumerate() {
            a[row][d + t] = x;
        }
    }
    // row reduce on the first d columns
    let mut pivot_row_of = vec![usize::MAX; d];
    let mut row = 0usize;
    for col in 0..d {
        let piv = (row..k).find(|&r| a[r][col] != 0);
        let Some(piv) = piv else {
            return Err(Error::internal("basis vectors are dependent"));
        };
        a.swap(row, piv);
        let inv = f.inv(a[row][col]);
        for c in col..d + images.len() {
            a[row][c] = f.mul(a[row][c], inv);
        }
        for r in 0..k {
            if r != row && a[r][col] != 0 {
                let factor = a[r][col];
                for c in col..d + images.len() {
                    let t = f.mul(factor, a[row][c]);
                    a[r][c] = f.sub(a[r][c], t);
                }
            }
        }
        pivot_row_of[col] = row;
        row += 1;
    }
    // residual rows must vanish on the image columns (images lie in the span)
    for r in row..k {
        if a[r][d..].iter().any(|&x| x != 0) {
            return Err(Error::internal("image vector escapes the invariant subspace"));
        }
    }
    let mut out = vec![vec![0u64; images.len()]; d];
    for s in 0..d {
        for t in 0..images.len() {
            out[s][t] = a[pivot_row_of[s]][d + t];
        }
    }
    Ok(out)
}

/// Lift chi(g_l) from its residue mod p to Z[zeta_conductor]: recover the
/// eigenvalue multiplicities of rho(g_l) by a discrete Fourier transform
/// over F_p and rebuild the exact sum of roots of unity.
#[allow(clippy::too_many_arguments)]
fn lift_value(
    g: &FiniteGroup,
    classes: &ConjugacyData,
    f: &Fp,
    w: u64,
    chi_mod: &[u64],
    l: usize,
    degree: u64,
    conductor: usize,
) -> Result<Cyclotomic> {
    let rep = classes.reps[l];
    let o = g.order_of(rep) as u64;
    let z = f.pow(w, (f.p - 1) / o); // fixed primitive o-th root mod p
    let z_inv = f.inv(z);
    let o_inv = f.inv(o % f.p);
    let mut value = Cyclotomic::zero(conductor);
    let mut msum = 0u64;
    for t in 0..o {
        let mut acc = 0u64;
        let mut zp = 1u64; // z^{-s t}
        let step = f.pow(z_inv, t);
        for s in 0..o {
            let cls = classes.class_of[g.pow(rep, s as i64)];
            acc = f.add(acc, f.mul(chi_mod[cls], zp));
            zp = f.mul(zp, step);
        }
        let m = f.mul(acc, o_inv);
        if m > degree {
            return Err(Error::internal("eigenvalue multiplicity out of range"));
        }
        if m != 0 {
            let power = (conductor as u64 / o * t) as usize % conductor;
            value = value.add(&Cyclotomic::root_power(conductor, power).scale(m as i128));
            msum += m;
        }
    }
    if msum != degree {
        return Err(Error::internal("eigenvalue multiplicities do not sum to the degree"));
    }
    Ok(value)
}
