//! Named fixture groups: binary polyhedral groups and the small catalog
//! groups the verification suites refer to by their `SG(order, id)` labels.
//!
//! Every fixture validates against frozen invariants (order, conjugacy
//! class count, abelianization) at construction time. The two groups that
//! are only described by a structure name, SG(32,2) = (C4 x C2) x| C4 and
//! SG(96,66) = SL(2,3) x| C4, are pinned to a specific action; see
//! `semidirect_candidates` for the enumeration that justifies the pin (the
//! chosen candidate is the unique isomorphism class passing the property
//! screens; the enumeration is re-run in the test suite).

use crate::error::{Error, Result};
use crate::group::conjugacy::ConjugacyData;
use crate::group::constructors::*;
use crate::group::isomorphism::{abelian_invariants, automorphisms, is_isomorphic};
use crate::group::presentation::Presentation;
use crate::group::todd_coxeter::todd_coxeter;
use crate::group::FiniteGroup;
use serde::Deserialize;
use std::path::Path;

/// Expected invariants for a fixture, checked at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureInvariants {
    pub order: usize,
    pub num_classes: usize,
    pub abelianization: Vec<usize>,
}

fn check_invariants(g: &FiniteGroup, want: &FixtureInvariants, name: &str) -> Result<()> {
    let got = FixtureInvariants {
        order: g.order(),
        num_classes: ConjugacyData::new(g).num_classes(),
        abelianization: abelian_invariants(g),
    };
    if got != *want {
        return Err(Error::Verification(format!(
            "fixture {name}: invariants {got:?} do not match expected {want:?}"
        )));
    }
    Ok(())
}

pub fn binary_tetrahedral() -> Result<FiniteGroup> {
    let g = make_sl2(3)?;
    check_invariants(
        &g,
        &FixtureInvariants {
            order: 24,
            num_classes: 7,
            abelianization: vec![3],
        },
        "2T",
    )?;
    Ok(g)
}

pub fn binary_octahedral() -> Result<FiniteGroup> {
    // <a,b | a^4 = b^3 = (ab)^2>
    let p = Presentation::parse(BINARY_OCTAHEDRAL)?;
    let g = todd_coxeter(&p, 20_000)?;
    check_invariants(
        &g,
        &FixtureInvariants {
            order: 48,
            num_classes: 8,
            abelianization: vec![2],
        },
        "2O",
    )?;
    // the binary polyhedral groups have a unique involution
    if g.element_orders().iter().filter(|&&o| o == 2).count() != 1 {
        return Err(Error::Verification("2O: involution count".into()));
    }
    Ok(g)
}

pub fn binary_icosahedral() -> Result<FiniteGroup> {
    let g = make_sl2(5)?;
    check_invariants(
        &g,
        &FixtureInvariants {
            order: 120,
            num_classes: 9,
            abelianization: vec![],
        },
        "2I",
    )?;
    Ok(g)
}

/// Binary dihedral group of order 4n (= the dicyclic group).
pub fn binary_dihedral(n: usize) -> Result<FiniteGroup> {
    make_dicyclic(n)
}

pub const BINARY_OCTAHEDRAL: &str = "gens 2\na^4 B^3\na^4 B A B A\n";

/// One entry of the fixture manifest: a presentation file plus the frozen
/// invariants the realized group must match.
#[derive(Clone, Debug, Deserialize)]
pub struct ManifestEntry {
    pub name: String,
    pub file: String,
    pub order: usize,
    pub num_classes: usize,
    pub abelianization: Vec<usize>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct FixtureManifest {
    pub version: u32,
    pub fixtures: Vec<ManifestEntry>,
}

/// Read and parse `manifest.json` in the fixture directory.
pub fn read_manifest(dir: &Path) -> Result<FixtureManifest> {
    let text = std::fs::read_to_string(dir.join("manifest.json"))?;
    serde_json::from_str(&text)
        .map_err(|e| Error::invalid(format!("fixture manifest is not valid JSON: {e}")))
}

/// Realize one named fixture from its presentation file and validate it
/// against the manifest invariants.
pub fn load_fixture(dir: &Path, name: &str) -> Result<FiniteGroup> {
    let manifest = read_manifest(dir)?;
    let entry = manifest
        .fixtures
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::invalid(format!("no fixture named {name} in the manifest")))?;
    let text = std::fs::read_to_string(dir.join(&entry.file))?;
    let p = Presentation::parse(&text)?;
    let g = todd_coxeter(&p, 20_000)?;
    check_invariants(
        &g,
        &FixtureInvariants {
            order: entry.order,
            num_classes: entry.num_classes,
            abelianization: entry.abelianization.clone(),
        },
        &entry.name,
    )?;
    Ok(g)
}

/// Validate every fixture in the directory; returns the validated names.
pub fn validate_fixture_dir(dir: &Path) -> Result<Vec<String>> {
    let manifest = read_manifest(dir)?;
    let mut names = Vec::new();
    for entry in &manifest.fixtures {
        load_fixture(dir, &entry.name)?;
        names.push(entry.name.clone());
    }
    Ok(names)
}

/// The fixture directory shipped with the source tree.
pub fn bundled_fixture_dir() -> std::path::PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

/// All pairwise non-isomorphic semidirect products N x| C_k, enumerated
/// over automorphisms of N whose order divides k. Returns one defining
/// automorphism per isomorphism class.
pub fn semidirect_candidates(
    n_grp: &FiniteGroup,
    k: usize,
) -> Result<Vec<(Vec<usize>, FiniteGroup)>> {
    let mut out: Vec<(Vec<usize>, FiniteGroup)> = Vec::new();
    for phi in automorphisms(n_grp) {
        // order of phi must divide k
        let mut pow: Vec<usize> = (0..n_grp.order()).collect();
        let mut o = 0usize;
        loop {
            pow = pow.iter().map(|&x| phi[x]).collect();
            o += 1;
            if pow.iter().enumerate().all(|(i, &x)| i == x) {
                break;
            }
        }
        if k % o != 0 {
            continue;
        }
        let cand = semidirect_by_automorphism(n_grp, &phi, k)?;
        if !out
            .iter()
            .any(|(_, h)| is_isomorphic(h, &cand).unwrap_or(false))
        {
            out.push((phi, cand));
        }
    }
    Ok(out)
}

/// The catalog lookup by the conventional (order, id) label.
pub fn small_group(order: usize, id: usize) -> Result<FiniteGroup> {
    let (g, inv, name): (FiniteGroup, FixtureInvariants, &str) = match (order, id) {
        (16, 4) => (
            make_semidirect(4, 4, 3)?,
            FixtureInvariants {
                order: 16,
                num_classes: 10,
                abelianization: vec![2, 4],
            },
            "SG(16,4)",
        ),
        (20, 1) => (
            make_semidirect(5, 4, 4)?,
            FixtureInvariants {
                order: 20,
                num_classes: 8,
                abelianization: vec![4],
            },
            "SG(20,1)",
        ),
        (20, 3) => (
            make_semidirect(5, 4, 2)?,
            FixtureInvariants {
                order: 20,
                num_classes: 5,
                abelianization: vec![4],
            },
            "SG(20,3)",
        ),
        (27, 4) => (
            make_semidirect(9, 3, 4)?,
            FixtureInvariants {
                order: 27,
                num_classes: 11,
                abelianization: vec![3, 3],
            },
            "SG(27,4)",
        ),
        (32, 2) => (
            small_group_32_2()?,
            FixtureInvariants {
                order: 32,
                num_classes: 20,
                abelianization: vec![4, 4],
            },
            "SG(32,2)",
        ),
        (40, 3) => (
            make_semidirect(5, 8, 2)?,
            FixtureInvariants {
                order: 40,
                num_classes: 10,
                abelianization: vec![8],
            },
            "SG(40,3)",
        ),
        (96, 66) => (
            small_group_96_66()?,
            FixtureInvariants {
                order: 96,
                num_classes: 16,
                abelianization: vec![4],
            },
            "SG(96,66)",
        ),
        _ => {
            return Err(Error::invalid(format!(
                "no catalog fixture for SG({order},{id})"
            )))
        }
    };
    check_invariants(&g, &inv, name)?;
    Ok(g)
}

/// (C4 x C2) x| C4: pinned action, see `semidirect_candidates` screening in
/// the tests.
fn small_group_32_2() -> Result<FiniteGroup> {
    let n = direct_product(&make_cyclic(4)?, &make_cyclic(2)?)?;
    let phi = pinned_automorphism_32()?;
    semidirect_by_automorphism(&n, &phi, 4)
}

fn pinned_automorphism_32() -> Result<Vec<usize>> {
    // Elements of C4 x C2 are pairs (a, b) numbered 2a + b. The pinned
    // involution is (a, b) -> (a, a + b mod 2), i.e. the generator of the
    // C4 factor picks up the C2 generator. semidirect_by_automorphism
    // rejects any vector that is not an automorphism of compatible order.
    Ok(PINNED_PHI_32.to_vec())
}

/// The unique (up to isomorphism) action of C4 on C4 x C2 whose semidirect
/// product has 20 conjugacy classes and abelianization C4 x C4; see the
/// `pinned_semidirects_unique_under_screen` test.
const PINNED_PHI_32: [usize; 8] = [0, 1, 3, 2, 4, 5, 7, 6];

fn small_group_96_66() -> Result<FiniteGroup> {
    let n = make_sl2(3)?;
    semidirect_by_automorphism(&n, &PINNED_PHI_96.to_vec(), 4)
}

/// An order-2 automorphism of SL(2,3); of the three isomorphism classes of
/// SL(2,3) x| C4 it is the unique one that both acts on a genus-23 surface
/// and fails the five-dimensional orthogonal embedding test (the screen the
/// catalog id is pinned by); see `pinned_semidirects_unique_under_screen`.
const PINNED_PHI_96: [usize; 24] = [
    0, 4, 5, 6, 1, 2, 3, 8, 7, 12, 14, 13, 9, 11, 10, 15, 17, 16, 21, 23, 22, 18, 20, 19,
];
