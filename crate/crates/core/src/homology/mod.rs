//! Integral homology of finitely generated chain complexes.
//!
//! A [`ChainComplex`] stores one integer boundary matrix per degree and checks
//! `D * D = 0` at construction. Homology groups come out of Smith normal form
//! as [`AbelianGroup`] values in invariant-factor form.

pub mod oracle;
pub mod snf;

use crate::cert::Certificate;
use crate::error::Error;
use crate::par;
use crate::simplicial::{Simplex, SimplicialSet};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use snf::{smith_invariants, IntMatrix};
use std::collections::HashMap;

/// A finitely generated abelian group `Z^r + Z/d_1 + ... + Z/d_t` with
/// `d_1 | d_2 | ... | d_t` and every `d_i > 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AbelianGroup {
    free_rank: usize,
    torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn free(rank: usize) -> Self {
        AbelianGroup { free_rank: rank, torsion: Vec::new() }
    }

    /// The `factors` must already form a divisibility chain of entries `> 1`.
    pub fn with_torsion(rank: usize, factors: &[u64]) -> Self {
        let torsion: Vec<BigInt> = factors.iter().map(|&d| BigInt::from(d)).collect();
        for w in torsion.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]), "torsion factors must form a chain");
        }
        assert!(torsion.iter().all(|d| *d > BigInt::one()));
        AbelianGroup { free_rank: rank, torsion }
    }

    /// Cokernel shape of a presentation with the given generator count and
    /// Smith invariants of the relation matrix. Unit invariants kill
    /// generators outright; the rest contribute torsion.
    pub fn from_presentation(generators: usize, invariants: &[BigInt]) -> Self {
        assert!(invariants.len() <= generators, "more relations than generators survive SNF");
        AbelianGroup {
            free_rank: generators - invariants.len(),
            torsion: invariants.iter().filter(|d| **d > BigInt::one()).cloned().collect(),
        }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Order of the group, or `None` when the free rank is positive.
    pub fn order(&self) -> Option<BigInt> {
        if self.free_rank > 0 {
            return None;
        }
        Some(self.torsion.iter().product())
    }

    /// Direct sum, re-normalized into a single divisibility chain.
    pub fn direct_sum(&self, other: &AbelianGroup) -> AbelianGroup {
        let mut all: Vec<BigInt> = self.torsion.clone();
        all.extend(other.torsion.iter().cloned());
        AbelianGroup {
            free_rank: self.free_rank + other.free_rank,
            torsion: merge_into_chain(&all),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "free_rank": self.free_rank,
            "torsion": self.torsion.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
        })
    }
}

impl std::fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Rewrite an arbitrary multiset of cyclic orders into invariant factors:
/// split into prime powers, stack each prime's exponents tallest first, and
/// read off layer products smallest last.
fn merge_into_chain(factors: &[BigInt]) -> Vec<BigInt> {
    let mut by_prime: Vec<(u64, Vec<u32>)> = Vec::new();
    for d in factors {
        let mut n = d.to_u64().expect("torsion factor exceeds u64 in chain merge");
        assert!(n > 1);
        let mut p = 2;
        while p * p <= n {
            if n % p == 0 {
                let mut e = 0;
                while n % p == 0 {
                    n /= p;
                    e += 1;
                }
                push_exponent(&mut by_prime, p, e);
            }
            p += 1;
        }
        if n > 1 {
            push_exponent(&mut by_prime, n, 1);
        }
    }
    let depth = by_prime.iter().map(|(_, es)| es.len()).max().unwrap_or(0);
    let mut chain = Vec::with_capacity(depth);
    for layer in 0..depth {
        let mut d = BigInt::one();
        for (p, es) in &by_prime {
            if let Some(&e) = es.get(layer) {
                d *= BigInt::from(*p).pow(e);
            }
        }
        chain.push(d);
    }
    chain.reverse();
    chain
}

fn push_exponent(by_prime: &mut Vec<(u64, Vec<u32>)>, p: u64, e: u32) {
    match by_prime.iter_mut().find(|(q, _)| *q == p) {
        Some((_, es)) => {
            // keep descending so layer 0 holds the largest power
            let pos = es.iter().position(|&x| x < e).unwrap_or(es.len());
            es.insert(pos, e);
        }
        None => by_prime.push((p, vec![e])),
    }
}

/// A nonnegatively graded chain complex of free abelian groups, given by the
/// boundary matrix in each degree. `boundaries[k]` maps degree `k` to degree
/// `k - 1`; the degree-zero entry must be a `0 x n_0` matrix.
#[derive(Debug)]
pub struct ChainComplex {
    basis_sizes: Vec<usize>,
    boundaries: Vec<IntMatrix>,
}

impl ChainComplex {
    pub fn new(basis_sizes: Vec<usize>, boundaries: Vec<IntMatrix>) -> Result<Self, Error> {
        if basis_sizes.is_empty() || boundaries.len() != basis_sizes.len() {
            return Err(Error::dim("need one boundary matrix per degree".to_string()));
        }
        if boundaries[0].rows() != 0 || boundaries[0].cols() != basis_sizes[0] {
            return Err(Error::dim(format!(
                "degree-zero boundary must be 0 x {}",
                basis_sizes[0]
            )));
        }
        for k in 1..boundaries.len() {
            if boundaries[k].rows() != basis_sizes[k - 1] || boundaries[k].cols() != basis_sizes[k]
            {
                return Err(Error::dim(format!(
                    "boundary in degree {k} must be {} x {}, found {} x {}",
                    basis_sizes[k - 1],
                    basis_sizes[k],
                    boundaries[k].rows(),
                    boundaries[k].cols()
                )));
            }
        }
        for k in 2..boundaries.len() {
            let square = boundaries[k - 1].mul(&boundaries[k])?;
            if !square.is_zero() {
                return Err(Error::invariant(format!(
                    "boundary squared is nonzero from degree {k}"
                )));
            }
        }
        Ok(ChainComplex { basis_sizes, boundaries })
    }

    /// Highest degree carried by the complex.
    pub fn top_degree(&self) -> usize {
        self.basis_sizes.len() - 1
    }

    pub fn basis_size(&self, k: usize) -> usize {
        self.basis_sizes[k]
    }

    pub fn boundary(&self, k: usize) -> &IntMatrix {
        &self.boundaries[k]
    }

    /// `H_k`. Honest answers need the boundary out of degree `k + 1`, so `k`
    /// must stay below the top degree.
    pub fn homology(&self, k: usize) -> Result<AbelianGroup, Error> {
        if k + 1 > self.top_degree() {
            return Err(Error::Truncation { needed: k + 1, available: self.top_degree() });
        }
        let out_rank = smith_invariants(&self.boundaries[k]).len();
        let in_invariants = smith_invariants(&self.boundaries[k + 1]);
        Ok(quotient_shape(self.basis_sizes[k], out_rank, &in_invariants))
    }

    /// All homology groups in degrees `0 ..= max_degree`, with the Smith
    /// reductions fanned out in parallel.
    pub fn homology_through(&self, max_degree: usize) -> Result<Vec<AbelianGroup>, Error> {
        if max_degree + 1 > self.top_degree() {
            return Err(Error::Truncation { needed: max_degree + 1, available: self.top_degree() });
        }
        let invariant_lists = par::map_collect((0..=max_degree + 1).collect(), |k| {
            smith_invariants(&self.boundaries[k])
        });
        Ok((0..=max_degree)
            .map(|k| {
                quotient_shape(
                    self.basis_sizes[k],
                    invariant_lists[k].len(),
                    &invariant_lists[k + 1],
                )
            })
            .collect())
    }
}

/// `H = ker / im` sizing: ambient rank, rank of the outgoing boundary, Smith
/// invariants of the incoming boundary.
fn quotient_shape(ambient: usize, out_rank: usize, in_invariants: &[BigInt]) -> AbelianGroup {
    let free_rank = ambient - out_rank - in_invariants.len();
    AbelianGroup {
        free_rank,
        torsion: in_invariants
            .iter()
            .filter(|d| **d > BigInt::one())
            .cloned()
            .collect(),
    }
}

/// Normalized chains of a simplicial set through degree `top`: the basis in
/// each degree is the nondegenerate simplices in enumeration order, and the
/// boundary is the alternating face sum with degenerate faces dropped. The
/// construction re-checks `D * D = 0`.
pub fn normalized_chains<S: SimplicialSet + ?Sized>(
    s: &S,
    top: usize,
) -> Result<ChainComplex, Error> {
    if top > s.truncation() {
        return Err(Error::Truncation { needed: top, available: s.truncation() });
    }
    let mut bases: Vec<Vec<Simplex>> = Vec::with_capacity(top + 1);
    for k in 0..=top {
        let mut basis = Vec::new();
        for x in s.level(k)? {
            if !s.is_degenerate(&x)? {
                basis.push(x);
            }
        }
        bases.push(basis);
    }
    let mut boundaries = Vec::with_capacity(top + 1);
    boundaries.push(IntMatrix::zero(0, bases[0].len()));
    for k in 1..=top {
        let index: HashMap<&Simplex, usize> =
            bases[k - 1].iter().enumerate().map(|(r, x)| (x, r)).collect();
        let mut d = IntMatrix::zero(bases[k - 1].len(), bases[k].len());
        for (col, x) in bases[k].iter().enumerate() {
            for i in 0..=k {
                let y = s.face(i, x)?;
                match index.get(&y) {
                    Some(&row) => d.add_to_entry(row, col, if i % 2 == 0 { 1 } else { -1 }),
                    None => {
                        debug_assert!(
                            s.is_degenerate(&y).unwrap_or(false),
                            "face {y} missing from the nondegenerate basis"
                        );
                    }
                }
            }
        }
        boundaries.push(d);
    }
    ChainComplex::new(bases.iter().map(Vec::len).collect(), boundaries)
}

/// Certifies that two complexes share all homology groups in degrees
/// `0 ..= through`, each side computed independently from its own normalized
/// chains.
pub fn compare_homology<S: SimplicialSet + ?Sized, T: SimplicialSet + ?Sized>(
    s: &S,
    t: &T,
    through: usize,
) -> Result<Certificate, Error> {
    let label = format!("homology-compare({}, {})", s.label(), t.label());
    let left = normalized_chains(s, through + 1)?.homology_through(through)?;
    let right = normalized_chains(t, through + 1)?.homology_through(through)?;
    let counterexample = (0..=through).find_map(|k| {
        (left[k] != right[k]).then(|| format!("degree {k}: {} vs {}", left[k], right[k]))
    });
    Ok(Certificate::new(label, (through + 1) as u64, counterexample))
}

/// Connected components of a vertex set under the given edges, by union-find.
pub fn component_count(vertices: usize, edges: &[(usize, usize)]) -> usize {
    let mut parent: Vec<usize> = (0..vertices).collect();
    fn root(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    for &(a, b) in edges {
        let (ra, rb) = (root(&mut parent, a), root(&mut parent, b));
        parent[ra] = rb;
    }
    (0..vertices).filter(|&v| root(&mut parent, v) == v).count()
}
