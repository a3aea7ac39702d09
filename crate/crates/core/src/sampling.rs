//! Seeded random chi-vectors and strict bundle triples for property sweeps.
//!
//! Every case gets its own ChaCha stream derived from `(seed, case)`, so
//! sweeps can run in parallel and still reproduce bit-for-bit.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use rayon::prelude::*;

use crate::bundle_analysis::{congruence_report, difference_decomposition, difference_direct, BundleTriple};
use crate::closed_forms::{chi_y, complete_chi_vector, ClosedFormInput};
use crate::hodge_core::ChiVector;
use crate::symbolic_verify::{Claim, VerificationVerdict, Witness};
use crate::Strictness;

/// Default magnitude bound for freely drawn entries.
pub const DEFAULT_BOUND: i64 = 50;

/// Independent generator for case number `case` under `seed`.
pub fn case_rng(seed: u64, case: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(case);
    rng
}

/// Stable case id for `(group, index)`, e.g. a dimension and a sample index.
pub fn case_id(group: u64, index: u64) -> u64 {
    (group << 32) | index
}

fn free_entries<R: Rng>(rng: &mut R, dim: usize, bound: i64) -> Vec<BigInt> {
    (0..=dim / 2).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect()
}

fn mirror(free: Vec<BigInt>, dim: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::zero(); dim + 1];
    for (p, v) in free.into_iter().enumerate() {
        if dim - p != p {
            c[dim - p] = if dim % 2 == 1 { -v.clone() } else { v.clone() };
        }
        c[p] = v;
    }
    c
}

/// Entries `0..=dim/2` drawn uniformly from `[-bound, bound]`, the rest
/// forced by duality.
pub fn random_chi_vector<R: Rng>(rng: &mut R, dim: usize, bound: i64) -> ChiVector {
    ChiVector::new(mirror(free_entries(rng, dim, bound), dim)).expect("mirrored by construction")
}

/// Coefficient of `χ^p` in the Euler form `Σ (-1)^p χ^p` once duality has
/// folded the upper half onto `p <= dim/2`.
pub fn folded_euler_coefficient(dim: usize, p: usize) -> i64 {
    let sign = if p % 2 == 0 { 1 } else { -1 };
    // the mirrored entry contributes the same sign in either parity of dim
    if 2 * p == dim {
        sign
    } else {
        2 * sign
    }
}

/// A strict triple: fiber and base free, the total's free entries free
/// except the highest one (index `dim/2`), which is solved from
/// `χ(E) = χ(F)χ(B)`. Its folded Euler coefficient is ±1 in even total
/// dimension and ±2 in odd, where `χ(F)χ(B)` is even because one factor has
/// odd dimension.
pub fn random_strict_triple<R: Rng>(rng: &mut R, fiber_dim: usize, base_dim: usize, bound: i64) -> BundleTriple {
    let fiber = random_chi_vector(rng, fiber_dim, bound);
    let base = random_chi_vector(rng, base_dim, bound);
    let dim = fiber_dim + base_dim;
    let mut free = free_entries(rng, dim, bound);
    let target = fiber.euler() * base.euler();
    let pivot = dim / 2;
    let rest: BigInt = (0..pivot)
        .map(|p| BigInt::from(folded_euler_coefficient(dim, p)) * &free[p])
        .sum();
    let coeff = BigInt::from(folded_euler_coefficient(dim, pivot));
    let (q, r) = (target - rest).div_rem(&coeff);
    assert!(r.is_zero(), "euler target has the pivot's parity");
    free[pivot] = q;
    let total = ChiVector::new(mirror(free, dim)).expect("mirrored by construction");
    BundleTriple::new(fiber, base, total, Strictness::Strict).expect("euler constraint solved")
}

/// First failing sample index, with a description of the failure.
fn first_failure(samples: u64, check: impl Fn(u64) -> Option<String> + Sync) -> Option<(u64, String)> {
    (0..samples).into_par_iter().filter_map(|i| check(i).map(|d| (i, d))).find_first(|_| true)
}

fn sampled_verdict(
    claim: Claim,
    params: &[(&str, usize)],
    samples: u64,
    failure: Option<(u64, String)>,
) -> VerificationVerdict {
    let residual = match &failure {
        None => format!("0 failures in {samples} samples"),
        Some((case, _)) => format!("failure at case {case}"),
    };
    let verdict = VerificationVerdict::new(claim, params, residual).detail("samples", samples);
    match failure {
        None => verdict,
        Some((case, detail)) => verdict.refute(Witness::Sample { case, detail }),
    }
}

/// Random duality-valid chi-vectors of dimension `dim`: the closed form and
/// the reconstruction from invariants must reproduce the direct values, and
/// every duality congruence must hold.
pub fn round_trip_sweep(dim: usize, samples: u64, seed: u64) -> VerificationVerdict {
    let failure = first_failure(samples, |i| {
        let c = random_chi_vector(&mut case_rng(seed, case_id(dim as u64, i)), dim, DEFAULT_BOUND);
        let input = ClosedFormInput::from_chi_vector(&c);
        let direct = c.genus_polynomial();
        match (chi_y(&input), complete_chi_vector(&input)) {
            (Ok(g), Ok(back)) if g == direct && back == c => {}
            (g, back) => return Some(format!("{c:?}: closed form {g:?}, reconstruction {back:?}")),
        }
        let report = congruence_report(&c);
        (!report.all_pass()).then(|| format!("{c:?}: {:?}", report.checks))
    });
    sampled_verdict(Claim::RoundTrip, &[("dim", dim), ("seed", seed as usize)], samples, failure)
}

/// Random strict triples: the defect decomposition sums to the direct
/// difference, and for even totals 4 divides the signature defect.
pub fn strict_triple_sweep(fiber_dim: usize, base_dim: usize, samples: u64, seed: u64) -> VerificationVerdict {
    let group = ((fiber_dim as u64) << 16) | base_dim as u64;
    let failure = first_failure(samples, |i| {
        let t = random_strict_triple(&mut case_rng(seed, case_id(group, i)), fiber_dim, base_dim, DEFAULT_BOUND);
        let d = match difference_decomposition(&t) {
            Ok(d) => d,
            Err(e) => return Some(e.to_string()),
        };
        if &d.sum() != difference_direct(&t).poly() {
            return Some(format!("{t:?}: decomposition {} vs direct {}", d.sum(), d.difference));
        }
        let four = BigInt::from(4);
        (t.dim() % 2 == 0 && !d.signature_defect.is_multiple_of(&four))
            .then(|| format!("{t:?}: signature defect {}", d.signature_defect))
    });
    sampled_verdict(
        Claim::StrictTriples,
        &[("f_dim", fiber_dim), ("b_dim", base_dim), ("seed", seed as usize)],
        samples,
        failure,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn folded_coefficients_reproduce_euler() {
        let mut rng = case_rng(3, 0);
        for dim in 0..12 {
            let c = random_chi_vector(&mut rng, dim, 20);
            let folded: BigInt = (0..=dim / 2)
                .map(|p| BigInt::from(folded_euler_coefficient(dim, p)) * c.get(p))
                .sum();
            assert_eq!(folded, c.euler(), "dim {dim}");
        }
    }

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let a = random_chi_vector(&mut case_rng(7, case_id(4, 1)), 4, 50);
        let b = random_chi_vector(&mut case_rng(7, case_id(4, 1)), 4, 50);
        let c = random_chi_vector(&mut case_rng(7, case_id(4, 2)), 4, 50);
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn strict_triples_satisfy_euler() {
        for f in 0..5 {
            for b in 0..5 {
                let t = random_strict_triple(&mut case_rng(11, case_id(f, b)), f as usize, b as usize, 30);
                assert!(t.constraints_hold());
                assert_eq!(t.total().euler(), t.fiber().euler() * t.base().euler());
            }
        }
    }

    #[test]
    fn small_sweeps_pass() {
        for dim in 1..6 {
            assert!(round_trip_sweep(dim, 50, 1).proved());
        }
        let v = strict_triple_sweep(2, 2, 50, 1);
        assert!(v.proved(), "{:?}", v.witness);
        assert_eq!(v.params["seed"], 1);
    }
}
