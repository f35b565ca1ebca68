//! Arithmetic and linear algebra over a prime field `F_p`, sized for the
//! class-algebra computations behind character tables. `p` always fits well
//! inside a `u64`, so products are done in `u128`.

#[derive(Clone, Copy, Debug)]
pub struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        Fp { p }
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.p != 0, "division by zero mod {}", self.p);
        self.pow(a, self.p - 2)
    }

    pub fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest prime `p ≡ 1 (mod m)` with `p > lower`.
pub fn prime_in_progression(m: u64, lower: u64) -> u64 {
    let mut p = (lower / m) * m + 1;
    loop {
        if p > lower && is_prime(p) {
            return p;
        }
        p += m;
    }
}

/// Smallest primitive root mod prime `p`.
pub fn primitive_root(p: u64) -> u64 {
    let f = Fp::new(p);
    let mut factors = Vec::new();
    let mut n = p - 1;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            factors.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        factors.push(n);
    }
    'outer: for g in 2..p {
        for &q in &factors {
            if f.pow(g, (p - 1) / q) == 1 {
                continue 'outer;
            }
        }
        return g;
    }
    unreachable!("no primitive root found for prime {p}")
}

// ---------------------------------------------------------------------------
// Dense polynomials over F_p, coefficients low-to-high.
// ---------------------------------------------------------------------------

pub fn poly_trim(a: &mut Vec<u64>) {
    while a.len() > 1 && *a.last().unwrap() == 0 {
        a.pop();
    }
}

pub fn poly_deg(a: &[u64]) -> usize {
    a.len() - 1
}

pub fn poly_mul(f: &Fp, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    poly_trim(&mut out);
    out
}

/// Remainder of `a` modulo monic-normalized `b`.
pub fn poly_rem(f: &Fp, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let db = poly_deg(b);
    let lead_inv = f.inv(b[db]);
    while poly_deg(&r) >= db && !(r.len() == 1 && r[0] == 0) {
        let dr = poly_deg(&r);
        let c = f.mul(r[dr], lead_inv);
        for i in 0..=db {
            let t = f.mul(c, b[i]);
            r[dr - db + i] = f.sub(r[dr - db + i], t);
        }
        poly_trim(&mut r);
    }
    r
}

pub fn poly_gcd(f: &Fp, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    poly_trim(&mut a);
    poly_trim(&mut b);
    while !(b.len() == 1 && b[0] == 0) {
        let r = poly_rem(f, &a, &b);
        a = b;
        b = r;
    }
    // normalize monic
    if !(a.len() == 1 && a[0] == 0) {
        let inv = f.inv(*a.last().unwrap());
        for c in a.iter_mut() {
            *c = f.mul(*c, inv);
        }
    }
    a
}

pub fn poly_derivative(f: &Fp, a: &[u64]) -> Vec<u64> {
    if a.len() == 1 {
        return vec![0];
    }
    let mut out = Vec::with_capacity(a.len() - 1);
    for (i, &c) in a.iter().enumerate().skip(1) {
        out.push(f.mul(c, (i as u64) % f.p));
    }
    poly_trim(&mut out);
    out
}

/// `base^e mod m` for polynomials.
pub fn poly_powmod(f: &Fp, base: &[u64], mut e: u64, m: &[u64]) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = poly_rem(f, base, m);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_rem(f, &poly_mul(f, &acc, &b), m);
        }
        b = poly_rem(f, &poly_mul(f, &b, &b), m);
        e >>= 1;
    }
    acc
}

/// All roots in `F_p` of a polynomial that splits into linear factors
/// (deterministic shift sequence). Roots returned sorted.
pub fn poly_roots(f: &Fp, a: &[u64]) -> Vec<u64> {
    let mut a = a.to_vec();
    poly_trim(&mut a);
    assert!(a.len() > 1 || a[0] != 0, "zero polynomial has no root list");
    // square-free part
    let d = poly_derivative(f, &a);
    let g = if d.len() == 1 && d[0] == 0 {
        a.clone()
    } else {
        let gc = poly_gcd(f, &a, &d);
        if poly_deg(&gc) == 0 {
            a.clone()
        } else {
            poly_div_exact(f, &a, &gc)
        }
    };
    let mut roots = Vec::new();
    collect_roots(f, g, &mut roots);
    roots.sort_unstable();
    roots
}

fn poly_div_exact(f: &Fp, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let db = poly_deg(b);
    let lead_inv = f.inv(b[db]);
    let mut q = vec![0u64; r.len().saturating_sub(db)];
    while poly_deg(&r) >= db && !(r.len() == 1 && r[0] == 0) {
        let dr = poly_deg(&r);
        let c = f.mul(r[dr], lead_inv);
        q[dr - db] = c;
        for i in 0..=db {
            let t = f.mul(c, b[i]);
            r[dr - db + i] = f.sub(r[dr - db + i], t);
        }
        poly_trim(&mut r);
    }
    poly_trim(&mut q);
    q
}

fn collect_roots(f: &Fp, mut g: Vec<u64>, out: &mut Vec<u64>) {
    poly_trim(&mut g);
    if poly_deg(&g) == 0 {
        return;
    }
    if g[0] == 0 {
        out.push(0);
        g.remove(0); // divide by x
        poly_trim(&mut g);
        if poly_deg(&g) == 0 {
            return;
        }
    }
    if poly_deg(&g) == 1 {
        out.push(f.mul(f.neg(g[0]), f.inv(g[1])));
        return;
    }
    // split via gcd with (x+a)^((p-1)/2) - 1, a = 0,1,2,...
    for shift in 0..f.p {
        let base = vec![shift, 1];
        let mut h = poly_powmod(f, &base, (f.p - 1) / 2, &g);
        h[0] = f.sub(h[0], 1);
        poly_trim(&mut h);
        let d = poly_gcd(f, &g, &h);
        let dd = poly_deg(&d);
        if dd > 0 && dd < poly_deg(&g) {
            let q = poly_div_exact(f, &g, &d);
            collect_roots(f, d, out);
            collect_roots(f, q, out);
            return;
        }
    }
    unreachable!("failed to split polynomial of degree {}", poly_deg(&g));
}

// ---------------------------------------------------------------------------
// Matrices over F_p (dense, row-major Vec<Vec<u64>>).
// ---------------------------------------------------------------------------

pub type Mat = Vec<Vec<u64>>;

pub fn mat_vec(f: &Fp, m: &Mat, v: &[u64]) -> Vec<u64> {
    m.iter()
        .map(|row| {
            let mut acc = 0u128;
            for (x, y) in row.iter().zip(v) {
                acc += *x as u128 * *y as u128;
                if acc >= u128::MAX / 2 {
                    acc %= f.p as u128;
                }
            }
            (acc % f.p as u128) as u64
        })
        .collect()
}

/// Basis of the kernel of `m` (square), via Gaussian elimination.
pub fn kernel_basis(f: &Fp, m: &Mat) -> Vec<Vec<u64>> {
    let n = m.len();
    let mut a = m.clone();
    let mut pivot_col_of_row = Vec::new();
    let mut row = 0usize;
    for col in 0..n {
        let mut piv = None;
        for r in row..n {
            if a[r][col] != 0 {
                piv = Some(r);
                break;
            }
        }
        let Some(piv) = piv else { continue };
        a.swap(row, piv);
        let inv = f.inv(a[row][col]);
        for c in col..n {
            a[row][c] = f.mul(a[row][c], inv);
        }
        for r in 0..n {
            if r != row && a[r][col] != 0 {
                let factor = a[r][col];
                for c in col..n {
                    let t = f.mul(factor, a[row][c]);
                    a[r][c] = f.sub(a[r][c], t);
                }
            }
        }
        pivot_col_of_row.push(col);
        row += 1;
        if row == n {
            break;
        }
    }
    let pivot_cols: std::collections::HashSet<usize> = pivot_col_of_row.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..n {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![0u64; n];
        v[free] = 1;
        for (r, &pc) in pivot_col_of_row.iter().enumerate() {
            v[pc] = f.neg(a[r][free]);
        }
        basis.push(v);
    }
    basis
}

/// Characteristic polynomial (monic, low-to-high) via Hessenberg reduction.
pub fn charpoly(f: &Fp, m: &Mat) -> Vec<u64> {
    let n = m.len();
    if n == 0 {
        return vec![1];
    }
    let mut h = m.clone();
    // similarity reduction to upper Hessenberg
    for col in 0..n.saturating_sub(2) {
        // find nonzero subdiagonal pivot
        let mut piv = None;
        for r in col + 1..n {
            if h[r][col] != 0 {
                piv = Some(r);
                break;
            }
        }
        let Some(piv) = piv else { continue };
        if piv != col + 1 {
            h.swap(piv, col + 1);
            for r in 0..n {
                h[r].swap(piv, col + 1);
            }
        }
        let inv = f.inv(h[col + 1][col]);
        for r in col + 2..n {
            if h[r][col] == 0 {
                continue;
            }
            let factor = f.mul(h[r][col], inv);
            for c in 0..n {
                let t = f.mul(factor, h[col + 1][c]);
                h[r][c] = f.sub(h[r][c], t);
            }
            // column op to preserve similarity: col (col+1) += factor * col r
            for rr in 0..n {
                let t = f.mul(factor, h[rr][r]);
                h[rr][col + 1] = f.add(h[rr][col + 1], t);
            }
        }
    }
    // char poly recurrence for Hessenberg matrices
    let mut polys: Vec<Vec<u64>> = vec![vec![1]]; // p_0 = 1
    for i in 0..n {
        // p_{i+1} = (x - h[i][i]) p_i - sum_{k<i} h[k][i] * (prod subdiag) * p_k
        let mut next = poly_mul(f, &[f.neg(h[i][i]), 1], &polys[i]);
        let mut prod = 1u64;
        for k in (0..i).rev() {
            prod = f.mul(prod, h[k + 1][k]);
            if h[k][i] != 0 && prod != 0 {
                let coeff = f.mul(h[k][i], prod);
                let term = polys[k].clone();
                for (j, &c) in term.iter().enumerate() {
                    if j >= next.len() {
                        next.resize(j + 1, 0);
                    }
                    next[j] = f.sub(next[j], f.mul(coeff, c));
                }
            }
        }
        poly_trim(&mut next);
        polys.push(next);
    }
    polys.pop().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_helpers() {
        assert!(is_prime(193));
        assert!(!is_prime(91));
        assert_eq!(prime_in_progression(24, 192), 193);
        assert_eq!(prime_in_progression(200, 400), 401);
        assert_eq!(prime_in_progression(6, 100), 103);
        let p = 13;
        let g = primitive_root(p);
        let f = Fp::new(p);
        let mut seen = std::collections::HashSet::new();
        for e in 0..p - 1 {
            seen.insert(f.pow(g, e));
        }
        assert_eq!(seen.len(), 12);
    }

    #[test]
    fn roots_of_split_polynomial() {
        let f = Fp::new(101);
        // (x-3)(x-5)(x-7) = x^3 - 15x^2 + 71x - 105
        let a = poly_mul(
            &f,
            &poly_mul(&f, &[f.neg(3), 1], &[f.neg(5), 1]),
            &[f.neg(7), 1],
        );
        assert_eq!(poly_roots(&f, &a), vec![3, 5, 7]);
        // repeated roots handled via square-free part
        let b = poly_mul(&f, &a, &[f.neg(5), 1]);
        assert_eq!(poly_roots(&f, &b), vec![3, 5, 7]);
    }

    #[test]
    fn charpoly_and_kernel() {
        let f = Fp::new(97);
        // companion-ish matrix with known eigenvalues {1, 2}
        let m = vec![vec![1, 1], vec![0, 2]];
        let cp = charpoly(&f, &m);
        // (x-1)(x-2) = x^2 - 3x + 2
        assert_eq!(cp, vec![2, f.neg(3), 1]);
        let mut m1 = m.clone();
        for i in 0..2 {
            m1[i][i] = f.sub(m1[i][i], 1);
        }
        let k = kernel_basis(&f, &m1);
        assert_eq!(k.len(), 1);
        let img = mat_vec(&f, &m1, &k[0]);
        assert!(img.iter().all(|&x| x == 0));
    }

    #[test]
    fn charpoly_larger() {
        let f = Fp::new(101);
        // 4x4 with eigenvalues 2,3,4,5 (upper triangular with noise made similar is
        // overkill; triangular suffices to exercise the Hessenberg recurrence)
        let m = vec![
            vec![2, 9, 1, 7],
            vec![0, 3, 4, 4],
            vec![0, 0, 4, 1],
            vec![0, 0, 0, 5],
        ];
        let cp = charpoly(&f, &m);
        assert_eq!(poly_roots(&f, &cp), vec![2, 3, 4, 5]);
    }
}
