#![allow(dead_code)]

use maxbetti::macaulay::{macaulay_lower_bound, macaulay_upper_bound};
use maxbetti::monomials::count_monomials;
use maxbetti::oracle::{enumerate_tuples, FamilyKind};
use maxbetti::{build_spec, BoundLists, ConstraintSpec, HilbertPolynomial};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

/// N = 5, Hilbert polynomial 49, h(6) = 41, Δh >= 8, 8, 5, 5 in degrees 3..6.
pub fn worked_example() -> ConstraintSpec {
    let lists = BoundLists::default().fix_hf(6, 41).diff_lower(3, 8).diff_lower(4, 8).diff_lower(5, 5).diff_lower(6, 5);
    build_spec(5, &lists, Some(&HilbertPolynomial::constant(49))).unwrap()
}

pub fn quadric_polynomial() -> HilbertPolynomial {
    maxbetti::cli::parse_polynomial("3,-6,175").unwrap()
}

pub fn upper(a: u64, d: usize) -> u64 {
    macaulay_upper_bound(a, d as i64).unwrap().to_u64().unwrap_or(u64::MAX)
}

pub fn lower(a: u64, d: usize) -> u64 {
    macaulay_lower_bound(a, d as i64).unwrap()
}

fn ring_size(num_vars: usize, d: usize) -> u64 {
    count_monomials(num_vars, d as u64).to_u64().unwrap_or(u64::MAX)
}

/// A random O-sequence `(1, l_1, ..., l_len-1)` in `num_vars` variables with
/// total at most `budget`.
pub fn random_o_sequence(rng: &mut ChaCha8Rng, num_vars: usize, len: usize, budget: u64) -> Vec<u64> {
    let mut dh = vec![1u64];
    let mut left = budget.saturating_sub(1);
    for d in 1..len {
        let cap = if d == 1 { num_vars as u64 } else { upper(dh[d - 1], d - 1) };
        let cap = cap.min(left).min(ring_size(num_vars, d));
        let v = rng.gen_range(0..=cap);
        dh.push(v);
        left -= v;
    }
    dh
}

/// A random small family around a random O-sequence, with a constant tail.
///
/// Bounds are drawn so that the anchor sequence usually (not always) stays
/// inside; roughly one spec in four keeps `F` trivial.
pub fn random_small_spec(rng: &mut ChaCha8Rng) -> ConstraintSpec {
    loop {
        let n_vars = rng.gen_range(3..=4usize);
        let big_d = rng.gen_range(1..=8usize);
        let anchor = random_o_sequence(rng, n_vars - 1, big_d + 1, 40);
        let h: Vec<u64> = anchor
            .iter()
            .scan(0, |a, &x| {
                *a += x;
                Some(*a)
            })
            .collect();
        let trivial_f = rng.gen_bool(0.25);
        let mut lists = BoundLists::default().fix_hf(big_d, h[big_d]);
        for (d, &v) in h.iter().enumerate().take(big_d) {
            if rng.gen_bool(0.4) {
                lists = lists.hf_lower(d, v.saturating_sub(rng.gen_range(0..=3)));
            }
            if !trivial_f && rng.gen_bool(0.5) {
                lists = lists.hf_upper(d, (v + rng.gen_range(0..=3)).min(40));
            }
        }
        for (d, &v) in anchor.iter().enumerate() {
            if rng.gen_bool(0.3) {
                lists = lists.diff_lower(d, v.saturating_sub(rng.gen_range(0..=2)));
            }
            if rng.gen_bool(0.3) {
                lists = lists.diff_upper(d, v + rng.gen_range(0..=3));
            }
        }
        if let Ok(spec) = build_spec(n_vars, &lists, None) {
            return spec;
        }
    }
}

/// Like [`random_small_spec`] but only families small enough to enumerate
/// quickly and nonempty under the growth condition.
pub fn random_checkable_spec(rng: &mut ChaCha8Rng) -> ConstraintSpec {
    loop {
        let spec = random_small_spec(rng);
        let Ok(loose) = enumerate_tuples(&spec, FamilyKind::WithoutMacaulayCondition, 200_000) else {
            continue;
        };
        if loose.is_empty() {
            continue;
        }
        match enumerate_tuples(&spec, FamilyKind::WithMacaulayCondition, 200_000) {
            Ok(t) if !t.is_empty() => return spec,
            _ => continue,
        }
    }
}

/// Two O-sequences in `num_vars` variables agreeing after degree `big_d`
/// and ending in zero, so their lex ideals are finitely generated within
/// the listed degrees.
pub fn random_o_sequence_pair(rng: &mut ChaCha8Rng, num_vars: usize, big_d: usize) -> (Vec<u64>, Vec<u64>) {
    loop {
        let extra = rng.gen_range(1..=3);
        let mut a = random_o_sequence(rng, num_vars, big_d + 1 + extra, 60);
        a.push(0);
        let b_prefix = random_o_sequence(rng, num_vars, big_d + 1, 60);
        if lower(a[big_d + 1], big_d + 1) > b_prefix[big_d] {
            continue;
        }
        let mut b = b_prefix;
        b.extend_from_slice(&a[big_d + 1..]);
        return (a, b);
    }
}

/// A random family constrained only by lower bounds on `h` and the
/// terminal value, so `F`, `g`, `f` stay trivial.
pub fn random_lower_bound_spec(rng: &mut ChaCha8Rng) -> ConstraintSpec {
    loop {
        let n_vars = rng.gen_range(3..=4usize);
        let big_d = rng.gen_range(1..=8usize);
        let anchor = random_o_sequence(rng, n_vars - 1, big_d + 1, 40);
        let mut c = 0;
        let mut lists = BoundLists::default();
        for (d, &l) in anchor.iter().enumerate() {
            c += l;
            if d == big_d {
                lists = lists.fix_hf(d, c);
            } else if rng.gen_bool(0.4) {
                lists = lists.hf_lower(d, c.saturating_sub(rng.gen_range(0..=3)));
            }
        }
        if let Ok(spec) = build_spec(n_vars, &lists, None) {
            return spec;
        }
    }
}

/// Points on a line in P^3: Hilbert polynomial `d + c`, a few random
/// bounds, nonempty under the growth condition.
pub fn line_spec(rng: &mut ChaCha8Rng) -> ConstraintSpec {
    loop {
        let c = rng.gen_range(1..=4i64);
        let p = HilbertPolynomial::new(vec![
            BigRational::from_integer(BigInt::from(c)),
            BigRational::from_integer(1.into()),
        ])
        .unwrap();
        let mut lists = BoundLists::default();
        for d in 1..=3usize {
            if rng.gen_bool(0.4) {
                lists = lists.hf_lower(d, rng.gen_range(1..=d as u64 + 2));
            }
            if rng.gen_bool(0.3) {
                lists = lists.diff_lower(d, rng.gen_range(0..=2));
            }
        }
        if let Ok(spec) = build_spec(4, &lists, Some(&p)) {
            if maxbetti::run(&spec, maxbetti::Algorithm::Complete, maxbetti::ResultsMode::None).is_ok() {
                return spec;
            }
        }
    }
}
