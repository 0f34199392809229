//! Permutations of `{1, ..., n}` with block composition and the reversal
//! involution.
//!
//! `compose(v, blocks)` substitutes the block permutations into `v`: letters
//! are grouped into consecutive blocks, each block is permuted internally by
//! its own permutation, and the blocks move as units to the slots prescribed
//! by `v`. The involution conjugates by the order-reversing permutation, and
//! the two structures commute: composing the involuted inputs yields the
//! involuted composite. `verify_equivariance` certifies that exhaustively.

use crate::cert::Certificate;
use crate::error::Error;
use crate::monoid::TwistedMonoid;
use crate::par;
use itertools::Itertools;
use serde::Serialize;

/// A permutation of `{1, ..., n}` in one-line notation: `image[a-1] = w(a)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self, Error> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            if v == 0 || v > n {
                return Err(Error::domain(format!(
                    "value {v} out of range for a degree {n} permutation"
                )));
            }
            if seen[v - 1] {
                return Err(Error::domain(format!("value {v} repeats in {image:?}")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { image })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { image: (1..=n).collect() }
    }

    /// The order-reversing permutation `a -> n + 1 - a`.
    pub fn reversal(n: usize) -> Self {
        Permutation { image: (1..=n).rev().collect() }
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    /// `w(a)` for `1 <= a <= n`.
    pub fn apply(&self, a: usize) -> usize {
        self.image[a - 1]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.image.len()];
        for (a, &v) in self.image.iter().enumerate() {
            image[v - 1] = a + 1;
        }
        Permutation { image }
    }

    /// `self` after `other`: `a -> self(other(a))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, Error> {
        if self.degree() != other.degree() {
            return Err(Error::dim(format!(
                "degrees {} and {} differ",
                self.degree(),
                other.degree()
            )));
        }
        let image = other.image.iter().map(|&v| self.image[v - 1]).collect();
        Ok(Permutation { image })
    }

    /// The involution `a -> n + 1 - w(a)`, i.e. postcomposition with the
    /// order reversal.
    pub fn involute(&self) -> Permutation {
        let n = self.degree();
        let image = self.image.iter().map(|&v| n + 1 - v).collect();
        Permutation { image }
    }

    /// All permutations of degree `n`, in itertools enumeration order.
    pub fn enumerate_all(n: usize) -> Vec<Permutation> {
        (1..=n)
            .permutations(n)
            .map(|image| Permutation { image })
            .collect()
    }
}

impl std::fmt::Display for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}]", self.image.iter().join(","))
    }
}

/// Block composition: substitute `blocks[i]` into slot `v(i+1)` of `v`.
///
/// With block sizes `s_1, ..., s_t` and offsets `o_i = s_1 + ... + s_{i-1}`,
/// the letter `j = o_i + a` of the composite goes to
/// `blocks[i](a) + sum of sizes of the blocks landing in slots below v(i)`.
pub fn compose(v: &Permutation, blocks: &[Permutation]) -> Result<Permutation, Error> {
    let t = v.degree();
    if blocks.len() != t {
        return Err(Error::dim(format!(
            "arity {t} permutation given {} blocks",
            blocks.len()
        )));
    }
    let sizes: Vec<usize> = blocks.iter().map(|b| b.degree()).collect();
    let v_inv = v.inverse();
    // slot_offset[r] = total size of the blocks placed in slots 1..=r
    let mut slot_offset = vec![0usize; t + 1];
    for r in 1..=t {
        slot_offset[r] = slot_offset[r - 1] + sizes[v_inv.apply(r) - 1];
    }
    let total: usize = sizes.iter().sum();
    let mut image = Vec::with_capacity(total);
    for (i, block) in blocks.iter().enumerate() {
        let out_base = slot_offset[v.apply(i + 1) - 1];
        for a in 1..=sizes[i] {
            image.push(block.apply(a) + out_base);
        }
    }
    Permutation::new(image)
}

/// Evaluate a permutation on a tuple of monoid elements: the product
/// `elems[u^{-1}(1)] * elems[u^{-1}(2)] * ...`, the unit for the empty tuple.
pub fn algebra_eval(a: &TwistedMonoid, u: &Permutation, elems: &[usize]) -> Result<usize, Error> {
    if elems.len() != u.degree() {
        return Err(Error::dim(format!(
            "degree {} permutation applied to {} elements",
            u.degree(),
            elems.len()
        )));
    }
    for &e in elems {
        if e >= a.size() {
            return Err(Error::domain(format!("element id {e} out of range")));
        }
    }
    let inv = u.inverse();
    let mut acc = a.unit();
    for k in 1..=u.degree() {
        acc = a.mul(acc, elems[inv.apply(k) - 1]);
    }
    Ok(acc)
}

#[derive(Debug, Clone, Serialize)]
pub struct EquivarianceCertificate {
    pub max_arity: usize,
    pub max_block_degree: usize,
    pub cases: u64,
    pub counterexample: Option<String>,
}

impl EquivarianceCertificate {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl std::fmt::Display for EquivarianceCertificate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.counterexample {
            None => write!(
                f,
                "block composition equivariance, arity <= {}, degrees <= {}: pass ({} cases)",
                self.max_arity, self.max_block_degree, self.cases
            ),
            Some(c) => write!(f, "block composition equivariance: FAIL: {c}"),
        }
    }
}

fn size_tuples(t: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..t {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..=max).map(move |s| {
                    let mut next = prefix.clone();
                    next.push(s);
                    next
                })
            })
            .collect();
    }
    out
}

fn block_tuples(sizes: &[usize]) -> Vec<Vec<Permutation>> {
    let mut out: Vec<Vec<Permutation>> = vec![vec![]];
    for &s in sizes {
        let perms = Permutation::enumerate_all(s);
        out = out
            .into_iter()
            .flat_map(|prefix| {
                perms.iter().map(move |p| {
                    let mut next = prefix.clone();
                    next.push(p.clone());
                    next
                })
            })
            .collect();
    }
    out
}

/// Exhaustively check that involution commutes with block composition for
/// every arity up to `max_arity` and every block degree up to
/// `max_block_degree` (degree-0 blocks included).
pub fn verify_equivariance(max_arity: usize, max_block_degree: usize) -> EquivarianceCertificate {
    let mut outer: Vec<(Permutation, Vec<usize>)> = Vec::new();
    for t in 1..=max_arity {
        for v in Permutation::enumerate_all(t) {
            for sizes in size_tuples(t, max_block_degree) {
                outer.push((v.clone(), sizes));
            }
        }
    }
    let cases: u64 = outer
        .iter()
        .map(|(_, sizes)| {
            sizes
                .iter()
                .map(|&s| (1..=s).product::<usize>() as u64)
                .product::<u64>()
        })
        .sum();
    let failure = par::first_failure(&outer, |(v, sizes)| {
        for blocks in block_tuples(sizes) {
            let composed = compose(v, &blocks).expect("arity matches by construction");
            let lhs = composed.involute();
            let involuted_blocks: Vec<Permutation> = blocks.iter().map(|b| b.involute()).collect();
            let rhs = compose(&v.involute(), &involuted_blocks)
                .expect("arity matches by construction");
            if lhs != rhs {
                return Some(format!(
                    "v = {v}, blocks = [{}]: involute(compose) = {lhs}, compose(involutes) = {rhs}",
                    blocks.iter().map(|b| b.to_string()).join(", ")
                ));
            }
        }
        None
    });
    EquivarianceCertificate { max_arity, max_block_degree, cases, counterexample: failure }
}

/// Exhaustively check operad associativity of block composition.
///
/// The sweep is over every outer permutation of arity `<= max_arity`, inner
/// blocks of degree `<= max_degree`, and a second layer of blocks of degree
/// `<= max_degree` substituted into the composite; both grouping orders must
/// agree. Case counts grow factorially, so keep the bounds small.
pub fn verify_associativity(max_arity: usize, max_degree: usize) -> Certificate {
    let label = format!("block composition associativity, arity <= {max_arity}, degrees <= {max_degree}");
    let mut cases = 0u64;
    for t in 1..=max_arity {
        for v in Permutation::enumerate_all(t) {
            for sizes in size_tuples(t, max_degree) {
                for us in block_tuples(&sizes) {
                    let s: usize = sizes.iter().sum();
                    for inner_sizes in size_tuples(s, max_degree) {
                        for ws in block_tuples(&inner_sizes) {
                            cases += 1;
                            let first = compose(&compose(&v, &us).unwrap(), &ws).unwrap();
                            // regroup: feed each u its own span of ws
                            let mut regrouped = Vec::with_capacity(t);
                            let mut cursor = 0;
                            for (i, u) in us.iter().enumerate() {
                                let span = &ws[cursor..cursor + sizes[i]];
                                cursor += sizes[i];
                                regrouped.push(compose(u, span).unwrap());
                            }
                            let second = compose(&v, &regrouped).unwrap();
                            if first != second {
                                return Certificate::new(
                                    label,
                                    cases,
                                    Some(format!(
                                        "v = {v}, us = [{}], ws = [{}]: {first} vs {second}",
                                        us.iter().map(|u| u.to_string()).join(", "),
                                        ws.iter().map(|w| w.to_string()).join(", ")
                                    )),
                                );
                            }
                        }
                    }
                }
            }
        }
    }
    Certificate::new(label, cases, None)
}

/// Exhaustively check that evaluating on a monoid intertwines the involution
/// with the anti-involution: `tau(eval(u, elems)) = eval(involute(u),
/// tau(elems))` for every permutation of degree `<= max_degree` and every
/// tuple over `a`.
pub fn verify_algebra_equivariance(a: &TwistedMonoid, max_degree: usize) -> Certificate {
    let label = format!(
        "algebra evaluation equivariance over {}, degree <= {max_degree}",
        a.label()
    );
    let mut outer: Vec<(Permutation, Vec<usize>)> = Vec::new();
    for n in 0..=max_degree {
        for u in Permutation::enumerate_all(n) {
            for elems in crate::monoid::element_tuples(a.size(), n) {
                outer.push((u.clone(), elems));
            }
        }
    }
    let cases = outer.len() as u64;
    let failure = par::first_failure(&outer, |(u, elems)| {
        let lhs = a.tau(algebra_eval(a, u, elems).unwrap());
        let tau_elems: Vec<usize> = elems.iter().map(|&e| a.tau(e)).collect();
        let rhs = algebra_eval(a, &u.involute(), &tau_elems).unwrap();
        (lhs != rhs).then(|| {
            format!(
                "u = {u}, elems = {elems:?}: tau(eval) = {}, eval(involute, tau elems) = {}",
                a.name(lhs),
                a.name(rhs)
            )
        })
    });
    Certificate::new(label, cases, failure)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid;

    fn perm(image: &[usize]) -> Permutation {
        Permutation::new(image.to_vec()).unwrap()
    }

    #[test]
    fn construction_rejects_non_bijections() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0]).is_err());
        assert!(Permutation::new(vec![3, 1]).is_err());
        assert!(Permutation::new(vec![]).is_ok());
    }

    #[test]
    fn inverse_and_group_compose() {
        let w = perm(&[2, 3, 1]);
        assert_eq!(w.inverse(), perm(&[3, 1, 2]));
        assert_eq!(w.compose(&w.inverse()).unwrap(), Permutation::identity(3));
        assert_eq!(w.inverse().compose(&w).unwrap(), Permutation::identity(3));
    }

    #[test]
    fn block_composition_examples() {
        let swap = perm(&[2, 1]);
        let id1 = Permutation::identity(1);
        let id2 = Permutation::identity(2);
        let rev2 = Permutation::reversal(2);

        assert_eq!(compose(&swap, &[id1.clone(), id2.clone()]).unwrap(), perm(&[3, 1, 2]));
        assert_eq!(compose(&id2, &[id1.clone(), rev2.clone()]).unwrap(), perm(&[1, 3, 2]));
        assert_eq!(compose(&id2, &[id1.clone(), id1.clone()]).unwrap(), id2);

        // unit laws
        let w = perm(&[3, 1, 2]);
        assert_eq!(compose(&Permutation::identity(1), std::slice::from_ref(&w)).unwrap(), w);
        let ones = vec![Permutation::identity(1); 3];
        assert_eq!(compose(&w, &ones).unwrap(), w);

        // degree-0 blocks drop out
        let empty = Permutation::identity(0);
        assert_eq!(compose(&swap, &[empty.clone(), id2.clone()]).unwrap(), id2);
        assert_eq!(compose(&Permutation::identity(0), &[]).unwrap(), empty);

        assert!(compose(&swap, &[id1]).is_err());
    }

    #[test]
    fn involute_examples() {
        assert_eq!(Permutation::identity(3).involute(), perm(&[3, 2, 1]));
        assert_eq!(perm(&[2, 1, 3]).involute(), perm(&[2, 3, 1]));
        let w = perm(&[4, 1, 3, 2]);
        assert_eq!(w.involute().involute(), w);
    }

    #[test]
    fn equivariance_single_instance() {
        let id2 = Permutation::identity(2);
        let blocks = [Permutation::identity(1), Permutation::reversal(2)];
        let lhs = compose(&id2, &blocks).unwrap().involute();
        let involuted: Vec<Permutation> = blocks.iter().map(|b| b.involute()).collect();
        let rhs = compose(&id2.involute(), &involuted).unwrap();
        assert_eq!(lhs, perm(&[3, 1, 2]));
        assert_eq!(rhs, lhs);
    }

    #[test]
    fn equivariance_sweep_small() {
        let cert = verify_equivariance(2, 2);
        assert!(cert.passed(), "{cert}");
    }

    #[test]
    fn equivariance_sweep_full() {
        let cert = verify_equivariance(3, 3);
        assert!(cert.passed(), "{cert}");
        // arity 1: 1 * 10; arity 2: 2 * 10^2; arity 3: 6 * 10^3 weighted by
        // block permutation counts: sum over size tuples of prod(s_i!).
        assert!(cert.cases > 0);
    }

    #[test]
    fn associativity_sweep() {
        let cert = verify_associativity(2, 2);
        assert!(cert.passed(), "{cert}");
    }

    #[test]
    fn algebra_eval_examples() {
        let c2 = monoid::cyclic_group(2).unwrap();
        let x = 1;
        let e = 0;
        let rev3 = Permutation::reversal(3);
        assert_eq!(algebra_eval(&c2, &rev3, &[x, e, x]).unwrap(), e);

        let s3 = monoid::symmetric_group_3().unwrap();
        let a = s3.id_of("(12)").unwrap();
        let b = s3.id_of("(13)").unwrap();
        let swap = perm(&[2, 1]);
        // u = swap: u^{-1}(1) = 2, u^{-1}(2) = 1, so the product is b * a
        assert_eq!(algebra_eval(&s3, &swap, &[a, b]).unwrap(), s3.mul(b, a));
        assert_eq!(
            algebra_eval(&s3, &Permutation::identity(2), &[a, b]).unwrap(),
            s3.mul(a, b)
        );

        // empty product is the unit
        assert_eq!(
            algebra_eval(&s3, &Permutation::identity(0), &[]).unwrap(),
            s3.unit()
        );

        assert!(algebra_eval(&s3, &swap, &[a]).is_err());
        assert!(algebra_eval(&s3, &swap, &[a, 99]).is_err());
    }

    #[test]
    fn algebra_equivariance_sweep() {
        for m in [monoid::cyclic_group(2).unwrap(), monoid::symmetric_group_3().unwrap()] {
            let cert = verify_algebra_equivariance(&m, 3);
            assert!(cert.passed(), "{cert}");
        }
    }

    #[test]
    fn block_composition_coheres_with_algebra_eval() {
        let s3 = monoid::symmetric_group_3().unwrap();
        for t in 1..=2usize {
            for v in Permutation::enumerate_all(t) {
                for sizes in super::size_tuples(t, 2) {
                    for blocks in super::block_tuples(&sizes) {
                        let total: usize = sizes.iter().sum();
                        for elems in monoid::element_tuples(s3.size(), total) {
                            let composite = compose(&v, &blocks).unwrap();
                            let direct = algebra_eval(&s3, &composite, &elems).unwrap();
                            let mut cursor = 0;
                            let mut block_values = Vec::with_capacity(t);
                            for (i, b) in blocks.iter().enumerate() {
                                let span = &elems[cursor..cursor + sizes[i]];
                                cursor += sizes[i];
                                block_values.push(algebra_eval(&s3, b, span).unwrap());
                            }
                            let nested = algebra_eval(&s3, &v, &block_values).unwrap();
                            assert_eq!(direct, nested);
                        }
                    }
                }
            }
        }
    }
}
