//! Sphere-action obstructions: the classical SO(3) subgroup list, SO(4)
//! membership by the character route with a structural central-product
//! cross-check, the S^3/S^4 obstruction verdicts, minimal sphere dimensions
//! for split metacyclic groups, and the prime-witness pipeline behind the
//! polynomial genus bound.
//!
//! The reduction from "finite subgroup of orientation-preserving
//! homeomorphisms of S^3" to "finite subgroup of SO(4)" is taken as an
//! axiom; the engine decides only the linear questions.

use crate::catalog::{binary_icosahedral, binary_octahedral, binary_tetrahedral};
use crate::chartab::embed::OrthogonalSummands;
use crate::chartab::CharacterTable;
use crate::error::{Error, Result};
use crate::fp::is_prime;
use crate::group::constructors::{
    central_product, make_alternating4, make_alternating5, make_cyclic, make_dicyclic,
    make_dihedral, make_semidirect, make_symmetric4,
};
use crate::group::isomorphism::{abelian_invariants, embeds_as_subgroup, is_isomorphic};
use crate::group::subgroups::index2_subgroups;
use crate::group::{FiniteGroup, DEFAULT_ORDER_CAP};
use crate::surface::ActionEngine;
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Orientation {
    Preserving,
    Any,
}

/// Parameters of the split metacyclic group Z_p x| Z_k with an effective
/// action a -> a^r (the multiplicative order of r mod p is exactly k).
#[derive(Clone, Debug, Serialize)]
pub struct MetacyclicParams {
    pub p: usize,
    pub k: usize,
    pub r: usize,
    pub orientation: Orientation,
}

/// Least r >= 2 acting on Z_p with exact multiplicative order k; exists iff
/// k divides p - 1.
pub fn effective_action_parameter(p: usize, k: usize) -> Result<usize> {
    if !is_prime(p as u64) || p % 2 == 0 {
        return Err(Error::invalid(format!("p = {p} must be an odd prime")));
    }
    if k < 2 || (p - 1) % k != 0 {
        return Err(Error::invalid(format!(
            "no effective Z_{k} action on Z_{p} (k must divide p - 1 and be >= 2)"
        )));
    }
    for r in 2..p {
        let mut o = 1usize;
        let mut acc = r % p;
        while acc != 1 {
            acc = acc * r % p;
            o += 1;
        }
        if o == k {
            return Ok(r);
        }
    }
    Err(Error::internal("no element of the required order mod p"))
}

impl MetacyclicParams {
    pub fn new(p: usize, k: usize, r: usize, orientation: Orientation) -> Result<Self> {
        let least = effective_action_parameter(p, k)?;
        // validate that r itself has exact order k
        let mut o = 1usize;
        let mut acc = r % p;
        if acc == 0 {
            return Err(Error::invalid("r must be a unit mod p"));
        }
        while acc != 1 {
            acc = acc * r % p;
            o += 1;
            if o > p {
                return Err(Error::invalid("r must be a unit mod p"));
            }
        }
        if o != k {
            return Err(Error::invalid(format!(
                "r = {r} has multiplicative order {o} mod {p}, need exactly {k} (e.g. r = {least})"
            )));
        }
        Ok(MetacyclicParams { p, k, r, orientation })
    }

    /// The default effective parameters with the least action parameter.
    pub fn effective(p: usize, k: usize, orientation: Orientation) -> Result<Self> {
        let r = effective_action_parameter(p, k)?;
        Ok(MetacyclicParams { p, k, r, orientation })
    }

    pub fn group(&self) -> Result<FiniteGroup> {
        make_semidirect(self.p, self.k, self.r)
    }

    /// Minimal n such that the group acts faithfully and topologically on
    /// S^n: 2k - 1 for odd k; for even k, k when the action must preserve
    /// orientation and k - 1 otherwise.
    pub fn min_sphere_dim(&self) -> usize {
        if self.k % 2 == 1 {
            2 * self.k - 1
        } else {
            match self.orientation {
                Orientation::Preserving => self.k,
                Orientation::Any => self.k - 1,
            }
        }
    }
}

/// The classical finite subgroups of SO(3): which family (if any) the group
/// is isomorphic to. Returns a family label such as "C12", "D6", "A4".
pub fn so3_classical_match(g: &FiniteGroup) -> Result<Option<String>> {
    let n = g.order();
    // cyclic iff some element has full order
    if g.element_orders().contains(&n) {
        return Ok(Some(format!("C{n}")));
    }
    if n % 2 == 0 && is_isomorphic(g, &make_dihedral(n / 2)?)? {
        return Ok(Some(format!("D{}", n / 2)));
    }
    match n {
        12 if is_isomorphic(g, &make_alternating4()?)? => Ok(Some("A4".into())),
        24 if is_isomorphic(g, &make_symmetric4()?)? => Ok(Some("S4".into())),
        60 if is_isomorphic(g, &make_alternating5()?)? => Ok(Some("A5".into())),
        _ => Ok(None),
    }
}

pub fn embeds_in_so3_classical(g: &FiniteGroup) -> Result<bool> {
    Ok(so3_classical_match(g)?.is_some())
}

/// SO(4) membership by the character route.
pub fn so4_membership(g: &FiniteGroup) -> Result<bool> {
    crate::chartab::embed::embeds_in_so(g, 4)
}

/// Outcome of the structural SO(4) route (subgroup of a central product of
/// two quaternionic groups).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum StructuralVerdict {
    Contained { factors: (String, String) },
    NotContained,
    /// part of the search space exceeded a cap; no verdict
    Skipped(String),
}

const STRUCTURAL_GROUP_CAP: usize = 48;
const STRUCTURAL_PRODUCT_CAP: usize = 2 * DEFAULT_ORDER_CAP;

/// The finite subgroups of the unit quaternions containing -1, restricted
/// to orders dividing `divisor`: even cyclic groups, binary dihedral
/// (dicyclic) groups, and the three binary polyhedral groups. Sorted by
/// order.
fn quaternionic_pool(divisor: usize) -> Result<Vec<(String, FiniteGroup)>> {
    let mut out: Vec<(String, FiniteGroup)> = Vec::new();
    for d in (2..=divisor).step_by(2) {
        if divisor % d == 0 {
            out.push((format!("C{d}"), make_cyclic(d)?));
        }
    }
    for m in 2..=divisor / 4 {
        if divisor % (4 * m) == 0 {
            out.push((format!("DC{m}"), make_dicyclic(m)?));
        }
    }
    if divisor % 24 == 0 {
        out.push(("2T".into(), binary_tetrahedral()?));
    }
    if divisor % 48 == 0 {
        out.push(("2O".into(), binary_octahedral()?));
    }
    if divisor % 120 == 0 {
        out.push(("2I".into(), binary_icosahedral()?));
    }
    out.sort_by_key(|(_, g)| g.order());
    Ok(out)
}

/// Structural SO(4) route: every finite subgroup of SO(4) lies in a central
/// product P1 x_{C2} P2 of quaternionic groups, and a preimage argument
/// bounds |P_i| to divisors of 2|G|. Exhaustive within the caps; pairs of
/// cyclic factors give abelian products of rank <= 2 and are screened
/// without being built.
pub fn so4_structural(g: &FiniteGroup) -> Result<StructuralVerdict> {
    if g.order() > STRUCTURAL_GROUP_CAP {
        return Ok(StructuralVerdict::Skipped(format!(
            "group order {} above the structural cap {STRUCTURAL_GROUP_CAP}",
            g.order()
        )));
    }
    let divisor = 2 * g.order();
    let pool = quaternionic_pool(divisor)?;
    let abelian_ok = g.is_abelian() && abelian_invariants(g).len() <= 2;
    let mut capped = false;
    for i in 0..pool.len() {
        for j in i..pool.len() {
            let (n1, p1) = &pool[i];
            let (n2, p2) = &pool[j];
            let cp_order = p1.order() * p2.order() / 2;
            if cp_order % g.order() != 0 {
                continue;
            }
            if p1.is_abelian() && p2.is_abelian() && !abelian_ok {
                // the central product would be abelian of rank <= 2
                continue;
            }
            if cp_order > STRUCTURAL_PRODUCT_CAP {
                capped = true;
                continue;
            }
            let z1 = p1.central_involutions()[0];
            let z2 = p2.central_involutions()[0];
            let cp = central_product(p1, z1, p2, z2)?;
            if embeds_as_subgroup(g, &cp) {
                return Ok(StructuralVerdict::Contained {
                    factors: (n1.clone(), n2.clone()),
                });
            }
        }
    }
    if capped {
        Ok(StructuralVerdict::Skipped(
            "some central products exceeded the product-order cap".into(),
        ))
    } else {
        Ok(StructuralVerdict::NotContained)
    }
}

/// S^3 obstruction: not a subgroup of SO(4).
pub fn s3_obstructed(g: &FiniteGroup) -> Result<bool> {
    Ok(!so4_membership(g)?)
}

/// S^4 obstruction: neither a subgroup of SO(5) nor possessing an index-2
/// subgroup contained in SO(4).
pub fn s4_obstructed(g: &FiniteGroup) -> Result<bool> {
    if crate::chartab::embed::embeds_in_so(g, 5)? {
        return Ok(false);
    }
    for s in index2_subgroups(g) {
        let (h, _) = g.subgroup(&s)?;
        if so4_membership(&h)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Full obstruction report for one group.
#[derive(Clone, Debug, Serialize)]
pub struct SphereReport {
    pub schema: String,
    pub group: String,
    pub tests: BTreeMap<String, bool>,
    pub witnesses: BTreeMap<String, String>,
    /// least n with an SO(n) embedding (bounded search)
    pub min_so_dim: Option<usize>,
    pub notes: Vec<String>,
}

pub fn sphere_report(g: &FiniteGroup, label: &str) -> Result<SphereReport> {
    let t = CharacterTable::new(g)?;
    let summands = OrthogonalSummands::new(g, &t)?;
    let mut tests = BTreeMap::new();
    let mut witnesses = BTreeMap::new();
    for n in [3usize, 4, 5] {
        let key = format!("so{n}");
        match summands.witness_in_so(g, n) {
            Some(counts) => {
                tests.insert(key.clone(), true);
                witnesses.insert(
                    key,
                    format!(
                        "orthogonal summands of degrees {:?}",
                        summands.witness_degrees(&counts)
                    ),
                );
            }
            None => {
                tests.insert(key.clone(), false);
                witnesses.insert(
                    key,
                    format!("exhausted all orthogonal summand multisets of total degree {n}"),
                );
            }
        }
    }
    if let Some(family) = so3_classical_match(g)? {
        witnesses.insert("so3_classical".into(), format!("isomorphic to {family}"));
        tests.insert("so3_classical".into(), true);
    } else {
        tests.insert("so3_classical".into(), false);
    }
    let mut index2_so4 = false;
    for s in index2_subgroups(g) {
        let (h, _) = g.subgroup(&s)?;
        if so4_membership(&h)? {
            index2_so4 = true;
            break;
        }
    }
    tests.insert("index2_so4".into(), index2_so4);
    tests.insert("s3_obstructed".into(), !tests["so4"]);
    tests.insert("s4_obstructed".into(), !tests["so5"] && !index2_so4);
    let mut min_so_dim = None;
    for n in 0..=2 * g.order() {
        if summands.embeds_in_so(g, n) {
            min_so_dim = Some(n);
            break;
        }
    }
    let mut notes = Vec::new();
    match so4_structural(g)? {
        StructuralVerdict::Contained { factors } => {
            notes.push(format!(
                "structural SO(4) route: contained in {} x_C2 {}",
                factors.0, factors.1
            ));
        }
        StructuralVerdict::NotContained => {
            notes.push("structural SO(4) route: exhausted all central products".into());
        }
        StructuralVerdict::Skipped(why) => {
            notes.push(format!("structural SO(4) cross-check skipped: {why}"));
        }
    }
    Ok(SphereReport {
        schema: "torsion-obstruct/1".into(),
        group: label.to_string(),
        tests,
        witnesses,
        min_so_dim,
        notes,
    })
}

/// The prime pair behind the "no faithful action on S^n" witness family:
/// the least odd prime q with (n+1)/2 < q <= n+1 (Bertrand), then the least
/// prime p = 1 (mod q) (Dirichlet; hard search ceiling 10^6).
#[derive(Clone, Debug, Serialize)]
pub struct DirichletWitness {
    pub n: usize,
    pub q: usize,
    pub p: usize,
    pub order: usize,
    pub min_sphere_dim: usize,
    /// built only when the order fits the table cap
    #[serde(skip)]
    pub group: Option<FiniteGroup>,
}

pub fn dirichlet_witness(n: usize) -> Result<DirichletWitness> {
    if n < 2 {
        return Err(Error::invalid("witness construction needs n >= 2"));
    }
    let q = (3..=n + 1)
        .step_by(2)
        .find(|&q| 2 * q > n + 1 && is_prime(q as u64))
        .ok_or_else(|| Error::resource("no odd prime in the Bertrand window"))?;
    const PRIME_CEILING: usize = 1_000_000;
    let p = (1..)
        .map(|m| m * q + 1)
        .take_while(|&p| p <= PRIME_CEILING)
        .find(|&p| is_prime(p as u64))
        .ok_or_else(|| Error::resource("no prime = 1 (mod q) under the ceiling"))?;
    let order = p * q;
    let group = if order <= DEFAULT_ORDER_CAP {
        Some(MetacyclicParams::effective(p, q, Orientation::Any)?.group()?)
    } else {
        None
    };
    Ok(DirichletWitness {
        n,
        q,
        p,
        order,
        min_sphere_dim: 2 * q - 1,
        group,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct OnsetReport {
    pub group: String,
    pub order: usize,
    /// least genus g0 (in the scanned window) such that the group acts on
    /// every genus in [g0, g0 + order]
    pub stable_from: usize,
    pub verified_through: usize,
}

/// The polynomial genus-bound chain for dimension n: the witness primes
/// (q, p) and the dominating term p^2 q, plus (when the witness group fits
/// the cap) the empirically observed onset of the stable genus range. The
/// onset is data, not a proof.
#[derive(Clone, Debug, Serialize)]
pub struct PipelineReport {
    pub schema: String,
    pub n: usize,
    pub q: usize,
    pub p: usize,
    pub genus_scale: usize,
    pub min_sphere_dim: usize,
    pub onset: Option<OnsetReport>,
}

pub fn genus_bound_pipeline(n: usize) -> Result<PipelineReport> {
    let w = dirichlet_witness(n)?;
    let onset = match &w.group {
        Some(g) => {
            let order = g.order();
            let scan_max = 4 * order;
            let mut eng = ActionEngine::new(g);
            let mut acts = vec![false; scan_max + 1];
            for h in 2..=scan_max {
                acts[h] = eng.acts_on_genus(h)?;
            }
            let mut found = None;
            'outer: for g0 in 2..=scan_max.saturating_sub(order) {
                for h in g0..=g0 + order {
                    if !acts[h] {
                        continue 'outer;
                    }
                }
                found = Some(g0);
                break;
            }
            found.map(|g0| OnsetReport {
                group: format!("M({},{})", w.p, w.q),
                order,
                stable_from: g0,
                verified_through: scan_max,
            })
        }
        None => None,
    };
    Ok(PipelineReport {
        schema: "torsion-obstruct/1".into(),
        n: w.n,
        q: w.q,
        p: w.p,
        genus_scale: w.p * w.p * w.q,
        min_sphere_dim: w.min_sphere_dim,
        onset,
    })
}
