//! Frobenius-Mednykh counting: the number of tuples
//! `(a_1,b_1,..,a_g0,b_g0,c_1,..,c_r)` with prescribed constraints on the
//! `c_j` and `prod [a_i,b_i] prod c_j = 1`, via the classical character-sum
//! formula; and the surjective (generating) count via Moebius inversion
//! over the subgroup lattice.
//!
//! For the surjective count the per-order sums `T_chi(o) = sum over elements
//! of order o of chi(x)` are rational integers (the set of order-o elements
//! is Galois stable), so the whole computation stays in scalar big-rational
//! arithmetic.

use crate::chartab::CharacterTable;
use crate::error::{Error, Result};
use crate::group::subgroups::SubgroupLattice;
use crate::group::FiniteGroup;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Pow, Signed, Zero};
use std::collections::HashMap;

/// Exact number of tuples with each `c_j` ranging over the chosen conjugacy
/// class (class indices into the table's class order).
pub fn frobenius_solution_count(
    g: &FiniteGroup,
    t: &CharacterTable,
    g0: usize,
    class_choices: &[usize],
) -> Result<BigInt> {
    let phi = crate::cyclotomic::euler_phi(t.conductor);
    let r = class_choices.len();
    let outer = BigRational::from(BigInt::from(g.order())).pow(2 * g0 as i32 - 1);
    // accumulate the cyclotomic sum with rational coefficients
    let mut acc = vec![BigRational::zero(); phi];
    for row in &t.rows {
        let mut term = crate::cyclotomic::Cyclotomic::one(t.conductor);
        for &cl in class_choices {
            term = term.mul(&row.values[cl].scale(t.classes.sizes[cl] as i128));
        }
        let weight = BigRational::from(BigInt::from(row.degree))
            .pow(2 - 2 * g0 as i32 - r as i32);
        for (a, &c) in acc.iter_mut().zip(&term.coeffs) {
            if c != 0 {
                *a += &weight * BigRational::from(BigInt::from(c));
            }
        }
    }
    for a in acc.iter().skip(1) {
        if !a.is_zero() {
            return Err(Error::internal("solution count is not rational"));
        }
    }
    let total = &acc[0] * outer;
    if !total.is_integer() || total.is_negative() {
        return Err(Error::internal("solution count is not a natural number"));
    }
    Ok(total.to_integer())
}

struct OrbitData {
    orbit_size: usize,
    mu: i64,
    sub: FiniteGroup,
    orders: Vec<usize>,
    table: Option<CharacterTable>,
    /// per element-order: T_chi(o) for each row of the table
    tsums: HashMap<usize, Vec<i128>>,
}

/// Per-group state for counting generating vectors: the subgroup lattice
/// with Moebius values, and lazily built character tables per subgroup
/// conjugacy orbit (conjugate subgroups contribute identically).
pub struct CountingContext {
    order: usize,
    orbits: Vec<OrbitData>,
}

impl CountingContext {
    pub fn new(g: &FiniteGroup, max_subgroups: usize) -> Result<Self> {
        let lat = SubgroupLattice::new(g, max_subgroups)?;
        let mut orbits = Vec::new();
        for (oid, &rep) in lat.orbit_reps.iter().enumerate() {
            let mu = lat.mu[rep];
            if mu == 0 {
                continue;
            }
            let (sub, _) = g.subgroup(&lat.subgroups[rep])?;
            let orders = sub.nontrivial_orders();
            orbits.push(OrbitData {
                orbit_size: lat.orbit_sizes[oid],
                mu,
                sub,
                orders,
                table: None,
                tsums: HashMap::new(),
            });
        }
        Ok(CountingContext {
            order: g.order(),
            orbits,
        })
    }

    pub fn group_order(&self) -> usize {
        self.order
    }

    /// Number of generating vectors of type (g0; periods) for the whole
    /// group: tuples whose entries generate G, with the `c_j` of exact
    /// orders `periods[j]`.
    pub fn count_generating_vectors(&mut self, g0: usize, periods: &[usize]) -> Result<BigInt> {
        let mut total = BigRational::zero();
        for data in &mut self.orbits {
            if periods.iter().any(|p| !data.orders.contains(p)) {
                // no elements of a required order: the restricted count is 0
                continue;
            }
            let n_all = Self::count_all_in(data, g0, periods)?;
            if n_all.is_zero() {
                continue;
            }
            total += n_all
                * BigRational::from(BigInt::from(data.mu) * BigInt::from(data.orbit_size));
        }
        if !total.is_integer() || total.is_negative() {
            return Err(Error::internal(
                "Moebius-inverted count is not a natural number",
            ));
        }
        Ok(total.to_integer())
    }

    /// Character-sum count of all (not necessarily generating) vectors
    /// inside the subgroup.
    fn count_all_in(data: &mut OrbitData, g0: usize, periods: &[usize]) -> Result<BigRational> {
        if data.table.is_none() {
            data.table = Some(CharacterTable::new(&data.sub)?);
        }
        for &o in periods {
            if !data.tsums.contains_key(&o) {
                let t = data.table.as_ref().unwrap();
                let sums = t
                    .rows
                    .iter()
                    .map(|row| {
                        let mut acc = crate::cyclotomic::Cyclotomic::zero(t.conductor);
                        for l in 0..t.num_classes() {
                            if data.sub.order_of(t.classes.reps[l]) == o {
                                acc = acc.add(&row.values[l].scale(t.classes.sizes[l] as i128));
                            }
                        }
                        acc.as_integer()
                            .ok_or_else(|| Error::internal("order-sum is not a rational integer"))
                    })
                    .collect::<Result<Vec<i128>>>()?;
                data.tsums.insert(o, sums);
            }
        }
        let t = data.table.as_ref().unwrap();
        let r = periods.len() as i32;
        let mut sum = BigRational::zero();
        for (i, row) in t.rows.iter().enumerate() {
            let mut num = BigInt::from(1);
            for &o in periods {
                let v = data.tsums[&o][i];
                if v == 0 {
                    num = BigInt::from(0);
                    break;
                }
                num *= BigInt::from(v);
            }
            if num.is_zero() {
                continue;
            }
            sum += BigRational::from(num)
                * BigRational::from(BigInt::from(row.degree)).pow(2 - 2 * g0 as i32 - r);
        }
        Ok(sum * BigRational::from(BigInt::from(data.sub.order())).pow(2 * g0 as i32 - 1))
    }

    /// Existence of a generating vector of the given type.
    pub fn has_generating_vector(&mut self, g0: usize, periods: &[usize]) -> Result<bool> {
        Ok(self.count_generating_vectors(g0, periods)? > BigInt::ZERO)
    }
}
