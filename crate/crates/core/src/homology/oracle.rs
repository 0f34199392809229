//! Independent expectations used to test the homology pipeline.
//!
//! Nothing here touches the Smith reduction in [`super::snf`] except as the
//! subject under test: invariant factors come from determinantal divisors,
//! group homology from closed forms, and fixed-complex homology from an orbit
//! decomposition computed directly on the multiplication table.

use crate::cert::Certificate;
use crate::error::Error;
use crate::homology::snf::{smith_invariants, IntMatrix};
use crate::homology::AbelianGroup;
use crate::monoid::TwistedMonoid;
use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `H_k` of the classifying space of a cyclic group of order `m`: `Z` in
/// degree zero, `Z/m` in odd degrees, zero in positive even degrees.
pub fn bar_cyclic_homology(m: usize, k: usize) -> AbelianGroup {
    if k == 0 {
        AbelianGroup::free(1)
    } else if k % 2 == 1 && m > 1 {
        AbelianGroup::with_torsion(0, &[m as u64])
    } else {
        AbelianGroup::free(0)
    }
}

/// Low-degree homology of the classifying space of the symmetric group on
/// three letters: `Z, Z/2, 0, Z/6`.
pub fn bar_symmetric_group_3_homology(k: usize) -> Option<AbelianGroup> {
    match k {
        0 => Some(AbelianGroup::free(1)),
        1 => Some(AbelianGroup::with_torsion(0, &[2])),
        2 => Some(AbelianGroup::free(0)),
        3 => Some(AbelianGroup::with_torsion(0, &[6])),
        _ => None,
    }
}

/// Expected homology of the involution-fixed subcomplex for a finite group
/// carrying inversion as its involution, computed from first principles.
///
/// The fixed elements are the self-inverse ones, and the twisted action by
/// `a` is conjugation. The fixed complex splits along conjugation orbits of
/// self-inverse elements, each contributing a copy of the classifying space
/// of the orbit's stabilizer. Degree zero therefore counts orbits and degree
/// one sums stabilizer abelianizations.
pub struct FixedExpectation {
    pub orbit_count: usize,
    pub h1: AbelianGroup,
}

pub fn orbit_fixed_expectation(m: &TwistedMonoid) -> Result<FixedExpectation, Error> {
    if !m.is_group() {
        return Err(Error::unsupported(format!(
            "orbit model needs a group, {} is not one",
            m.label()
        )));
    }
    for a in 0..m.size() {
        if m.mul(a, m.tau(a)) != m.unit() {
            return Err(Error::unsupported(format!(
                "orbit model needs inversion as the involution on {}",
                m.label()
            )));
        }
    }

    let fixed: Vec<usize> = (0..m.size()).filter(|&b| m.tau(b) == b).collect();
    let mut seen = vec![false; m.size()];
    let mut orbit_count = 0;
    let mut h1 = AbelianGroup::free(0);
    for &b in &fixed {
        if seen[b] {
            continue;
        }
        orbit_count += 1;
        let mut orbit = vec![b];
        seen[b] = true;
        let mut frontier = vec![b];
        while let Some(x) = frontier.pop() {
            for a in 0..m.size() {
                let y = m.mul(m.mul(a, x), m.tau(a));
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                    frontier.push(y);
                }
            }
        }
        let stabilizer: Vec<usize> = (0..m.size())
            .filter(|&a| m.mul(m.mul(a, b), m.tau(a)) == b)
            .collect();
        let factors = abelianization_invariant_factors(m, &stabilizer);
        h1 = h1.direct_sum(&AbelianGroup {
            free_rank: 0,
            torsion: factors,
        });
    }
    Ok(FixedExpectation { orbit_count, h1 })
}

/// Invariant factors of `H / [H, H]` for a subgroup `H` given by its element
/// ids, straight from the multiplication table.
fn abelianization_invariant_factors(m: &TwistedMonoid, subgroup: &[usize]) -> Vec<BigInt> {
    let inverse = |a: usize| (0..m.size()).find(|&b| m.mul(a, b) == m.unit()).unwrap();

    // commutator subgroup: close the set of commutators under multiplication
    let mut commutators: Vec<usize> = vec![m.unit()];
    for &a in subgroup {
        for &b in subgroup {
            let c = m.mul(m.mul(m.mul(a, b), inverse(a)), inverse(b));
            if !commutators.contains(&c) {
                commutators.push(c);
            }
        }
    }
    loop {
        let mut grew = false;
        let current = commutators.clone();
        for &a in &current {
            for &b in &current {
                let c = m.mul(a, b);
                if !commutators.contains(&c) {
                    commutators.push(c);
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }

    // quotient table on coset representatives
    let mut reps: Vec<usize> = Vec::new();
    let coset_rep = |reps: &[usize], x: usize| -> Option<usize> {
        reps.iter()
            .position(|&r| commutators.contains(&m.mul(x, inverse(r))))
    };
    for &x in subgroup {
        if coset_rep(&reps, x).is_none() {
            reps.push(x);
        }
    }
    let k = reps.len();
    let mut table = vec![vec![0usize; k]; k];
    let mut unit_idx = 0;
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            table[i][j] = coset_rep(&reps, m.mul(a, b)).expect("cosets closed under product");
        }
        if commutators.contains(&a) {
            unit_idx = i;
        }
    }
    abelian_table_invariant_factors(&table, unit_idx)
}

/// Invariant factors of a finite abelian group from its multiplication table,
/// via the primary decomposition: for each prime `p`, counting solutions of
/// `x^(p^j) = e` pins down the partition of exponents, and stacking the
/// primary layers yields the divisibility chain.
fn abelian_table_invariant_factors(table: &[Vec<usize>], unit: usize) -> Vec<BigInt> {
    let n = table.len();
    let mut primes = Vec::new();
    let mut rest = n;
    let mut p = 2;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            primes.push(p);
            while rest.is_multiple_of(p) {
                rest /= p;
            }
        }
        p += 1;
    }
    if rest > 1 {
        primes.push(rest);
    }

    let pow = |x: usize, mut e: usize| {
        let mut acc = unit;
        let mut base = x;
        while e > 0 {
            if e % 2 == 1 {
                acc = table[acc][base];
            }
            base = table[base][base];
            e /= 2;
        }
        acc
    };

    let mut prime_powers: Vec<BigInt> = Vec::new();
    for &p in &primes {
        // c[j] = #{x : x^(p^j) = e}; then #{parts >= j} = log_p(c[j] / c[j-1])
        let mut counts = vec![1usize];
        loop {
            let pj = p.pow(counts.len() as u32);
            let c = (0..n).filter(|&x| pow(x, pj) == unit).count();
            if c == *counts.last().unwrap() {
                break;
            }
            counts.push(c);
        }
        let mut ranks = Vec::new();
        for j in 1..counts.len() {
            let mut quotient = counts[j] / counts[j - 1];
            debug_assert_eq!(quotient * counts[j - 1], counts[j], "p-rank counts must divide");
            let mut r = 0;
            while quotient > 1 {
                quotient /= p;
                r += 1;
            }
            ranks.push(r);
        }
        // part i of the exponent partition has size #{j : ranks[j] > i}
        let width = ranks.first().copied().unwrap_or(0);
        for i in 0..width {
            let lambda_i = ranks.iter().filter(|&&r| r > i).count() as u32;
            prime_powers.push(BigInt::from(p).pow(lambda_i));
        }
    }
    super::merge_into_chain(&prime_powers)
}

/// Invariant factors by determinantal divisors: the `k`-th divisor is the gcd
/// of all `k x k` minors, and successive quotients give the factors. Only
/// sensible for small matrices; determinants use Laplace expansion.
pub fn invariant_factors_by_minors(m: &IntMatrix) -> Vec<BigInt> {
    let mut previous = BigInt::from(1);
    let mut factors = Vec::new();
    for k in 1..=m.rows().min(m.cols()) {
        let mut gcd = BigInt::zero();
        for rows in (0..m.rows()).combinations(k) {
            for cols in (0..m.cols()).combinations(k) {
                let d = minor(m, &rows, &cols);
                gcd = gcd.gcd(&d);
            }
        }
        if gcd.is_zero() {
            break;
        }
        factors.push((&gcd / &previous).abs());
        previous = gcd;
    }
    factors
}

fn minor(m: &IntMatrix, rows: &[usize], cols: &[usize]) -> BigInt {
    if rows.is_empty() {
        return BigInt::from(1);
    }
    let mut det = BigInt::zero();
    let rest: Vec<usize> = rows[1..].to_vec();
    for (j, &c) in cols.iter().enumerate() {
        let entry = m.get(rows[0], c);
        if entry.is_zero() {
            continue;
        }
        let sub_cols: Vec<usize> = cols
            .iter()
            .copied()
            .filter(|&x| x != c)
            .collect();
        let term = entry * minor(m, &rest, &sub_cols);
        if j % 2 == 0 {
            det += term;
        } else {
            det -= term;
        }
    }
    det
}

/// Random 4 x 4 matrices, Smith reduction vs determinantal divisors.
pub fn snf_random_cross_check(samples: usize, seed: u64) -> Certificate {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cert = Certificate::new("smith invariants match determinantal divisors", 0, None);
    for case in 0..samples {
        let mut m = IntMatrix::zero(4, 4);
        for i in 0..4 {
            for j in 0..4 {
                m.set(i, j, rng.gen_range(-5i64..=5));
            }
        }
        let fast = smith_invariants(&m);
        let slow = invariant_factors_by_minors(&m);
        cert.cases += 1;
        if fast != slow {
            cert.counterexample = Some(format!(
                "case {case}: reduction gave {fast:?}, divisors gave {slow:?}"
            ));
            return cert;
        }
    }
    cert
}
