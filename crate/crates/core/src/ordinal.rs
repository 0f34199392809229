//! Weakly increasing maps between finite ordinals `[m] = {0, 1, ..., m}`.
//!
//! These maps index the operators of every simplicial set in this crate: a
//! map `[m] -> [n]` acts contravariantly, sending level-`n` simplices to
//! level-`m` simplices. The module also carries the doubling calculus behind
//! the edgewise subdivision: `double` sends `[m] -> [n]` to a symmetric map
//! `[2m+1] -> [2n+1]`, `restrict_half` inverts it, and `zero_elimination`
//! produces the symmetric injections that omit a mirror pair of values.

use crate::cert::Certificate;
use crate::error::Error;
use crate::par;
use itertools::Itertools;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct OrdinalMap {
    codomain_top: usize,
    values: Vec<usize>,
}

impl OrdinalMap {
    /// Build a map `[values.len()-1] -> [codomain_top]` from its value list.
    pub fn new(codomain_top: usize, values: Vec<usize>) -> Result<Self, Error> {
        if values.is_empty() {
            return Err(Error::domain("an ordinal map needs at least one value"));
        }
        if let Some(&v) = values.iter().find(|&&v| v > codomain_top) {
            return Err(Error::domain(format!(
                "value {v} exceeds codomain top {codomain_top}"
            )));
        }
        if values.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::domain(format!(
                "values {values:?} are not weakly increasing"
            )));
        }
        Ok(OrdinalMap { codomain_top, values })
    }

    pub fn identity(n: usize) -> Self {
        OrdinalMap { codomain_top: n, values: (0..=n).collect() }
    }

    /// The injection `[n-1] -> [n]` that misses `i`.
    pub fn coface(i: usize, n: usize) -> Self {
        assert!(n >= 1 && i <= n, "coface index {i} out of range for [{}] -> [{n}]", n - 1);
        let values = (0..=n).filter(|&v| v != i).collect();
        OrdinalMap { codomain_top: n, values }
    }

    /// The surjection `[n+1] -> [n]` that hits `j` twice.
    pub fn codegeneracy(j: usize, n: usize) -> Self {
        assert!(j <= n, "codegeneracy index {j} out of range for [{}] -> [{n}]", n + 1);
        let mut values = Vec::with_capacity(n + 2);
        values.extend(0..=j);
        values.extend(j..=n);
        OrdinalMap { codomain_top: n, values }
    }

    pub fn domain_top(&self) -> usize {
        self.values.len() - 1
    }

    pub fn codomain_top(&self) -> usize {
        self.codomain_top
    }

    pub fn value(&self, i: usize) -> usize {
        self.values[i]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `self` after `inner`: the map sending `i` to `self(inner(i))`.
    pub fn compose(&self, inner: &OrdinalMap) -> Result<OrdinalMap, Error> {
        if inner.codomain_top != self.domain_top() {
            return Err(Error::dim(format!(
                "cannot compose {self} after {inner}: tops {} vs {} differ",
                self.domain_top(),
                inner.codomain_top
            )));
        }
        let values = inner.values.iter().map(|&v| self.values[v]).collect();
        Ok(OrdinalMap { codomain_top: self.codomain_top, values })
    }

    /// Canonical epi-mono factorization.
    ///
    /// The epi part collapses the positions where the value repeats, the mono
    /// part inserts the missed values; both index lists are strictly
    /// increasing. `Factorization::recompose` rebuilds the map from
    /// elementary cofaces and codegeneracies and must reproduce it exactly.
    pub fn factorize(&self) -> Factorization {
        let degeneracies = (0..self.domain_top())
            .filter(|&j| self.values[j] == self.values[j + 1])
            .collect();
        let faces = (0..=self.codomain_top)
            .filter(|v| !self.values.contains(v))
            .collect();
        Factorization {
            domain_top: self.domain_top(),
            codomain_top: self.codomain_top,
            degeneracies,
            faces,
        }
    }

    /// The symmetric extension `[2m+1] -> [2n+1]` of `self: [m] -> [n]`,
    /// fixing the first half and mirroring it onto the second half.
    pub fn double(&self) -> OrdinalMap {
        let m = self.domain_top();
        let n = self.codomain_top;
        let values = (0..=2 * m + 1)
            .map(|i| {
                if i <= m {
                    self.values[i]
                } else {
                    2 * n + 1 - self.values[2 * m + 1 - i]
                }
            })
            .collect();
        OrdinalMap { codomain_top: 2 * n + 1, values }
    }

    /// True when both tops are odd and `self(i) + self(m-i) = n` for all `i`.
    pub fn is_symmetric(&self) -> bool {
        let m = self.domain_top();
        let n = self.codomain_top;
        m % 2 == 1
            && n % 2 == 1
            && (0..=m).all(|i| self.values[i] + self.values[m - i] == n)
    }

    /// Inverse of `double` on symmetric maps: keep the first half.
    pub fn restrict_half(&self) -> Result<OrdinalMap, Error> {
        if !self.is_symmetric() {
            return Err(Error::domain(format!("{self} is not symmetric")));
        }
        let m = (self.domain_top() - 1) / 2;
        let n = (self.codomain_top - 1) / 2;
        OrdinalMap::new(n, self.values[..=m].to_vec())
    }

    /// The conjugate map `i -> n - self(m - i)`.
    ///
    /// Acting by the conjugate then applying the involution equals applying
    /// the involution then acting by the original map; symmetric maps are
    /// exactly the self-conjugate ones with odd tops.
    pub fn conjugate(&self) -> OrdinalMap {
        let m = self.domain_top();
        let n = self.codomain_top;
        let values = (0..=m).map(|i| n - self.values[m - i]).collect();
        OrdinalMap { codomain_top: n, values }
    }

    /// All weakly increasing maps `[m] -> [n]` in lexicographic order.
    pub fn enumerate_all(m: usize, n: usize) -> Vec<OrdinalMap> {
        (0..=n)
            .combinations_with_replacement(m + 1)
            .map(|values| OrdinalMap { codomain_top: n, values })
            .collect()
    }
}

impl std::fmt::Display for OrdinalMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{:?}:[{}]->[{}]",
            self.values,
            self.domain_top(),
            self.codomain_top
        )
    }
}

/// Epi-mono factorization data: collapse positions, then missed values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub domain_top: usize,
    pub codomain_top: usize,
    /// Positions `j` with `f(j) = f(j+1)`, strictly increasing.
    pub degeneracies: Vec<usize>,
    /// Values missed by the image, strictly increasing.
    pub faces: Vec<usize>,
}

impl Factorization {
    /// Rebuild the map by composing elementary cofaces and codegeneracies.
    ///
    /// Collapses are applied from the largest position down, insertions from
    /// the smallest missed value up; this is the unique normalization in
    /// which both index lists increase.
    pub fn recompose(&self) -> OrdinalMap {
        let mut acc = OrdinalMap::identity(self.domain_top);
        let mut top = self.domain_top;
        for &j in self.degeneracies.iter().rev() {
            top -= 1;
            acc = OrdinalMap::codegeneracy(j, top)
                .compose(&acc)
                .expect("codegeneracy chain is composable");
        }
        for &i in &self.faces {
            top += 1;
            acc = OrdinalMap::coface(i, top)
                .compose(&acc)
                .expect("coface chain is composable");
        }
        acc
    }
}

/// The symmetric injection `[2m-1] -> [2m+1]` omitting `i` and `2m+1-i`.
pub fn zero_elimination(m: usize, i: usize) -> Result<OrdinalMap, Error> {
    if m == 0 {
        return Err(Error::domain("zero_elimination needs m >= 1"));
    }
    if i > m {
        return Err(Error::domain(format!(
            "zero_elimination index {i} exceeds m = {m}"
        )));
    }
    let values = (0..=2 * m + 1)
        .filter(|&v| v != i && v != 2 * m + 1 - i)
        .collect();
    OrdinalMap::new(2 * m + 1, values)
}

/// Exhaustively certify that `factorize` followed by `recompose` is the
/// identity on all maps with tops at most `max_m`, `max_n`.
pub fn verify_factorization(max_m: usize, max_n: usize) -> Certificate {
    let all: Vec<OrdinalMap> = (0..=max_m)
        .flat_map(|m| (0..=max_n).flat_map(move |n| OrdinalMap::enumerate_all(m, n)))
        .collect();
    let cases = all.len() as u64;
    let failure = par::first_failure(&all, |f| {
        let back = f.factorize().recompose();
        (back != *f).then(|| format!("{f} recomposed to {back}"))
    });
    Certificate::new(
        format!("factorize/recompose round trip, tops <= ({max_m}, {max_n})"),
        cases,
        failure,
    )
}

/// Exhaustively certify that `double` and `restrict_half` form a bijection
/// between maps `[m] -> [n]` and symmetric maps `[2m+1] -> [2n+1]`.
pub fn verify_double_bijection(max_m: usize, max_n: usize) -> Certificate {
    let mut cases = 0u64;
    for m in 0..=max_m {
        for n in 0..=max_n {
            let halves = OrdinalMap::enumerate_all(m, n);
            let symmetric: Vec<OrdinalMap> = OrdinalMap::enumerate_all(2 * m + 1, 2 * n + 1)
                .into_iter()
                .filter(|t| t.is_symmetric())
                .collect();
            cases += (halves.len() + symmetric.len()) as u64;
            for s in &halves {
                let t = s.double();
                if !t.is_symmetric() {
                    return Certificate::new(
                        "double/restrict_half bijection",
                        cases,
                        Some(format!("double({s}) = {t} is not symmetric")),
                    );
                }
                let back = match t.restrict_half() {
                    Ok(b) => b,
                    Err(e) => {
                        return Certificate::new(
                            "double/restrict_half bijection",
                            cases,
                            Some(format!("restrict_half(double({s})) failed: {e}")),
                        )
                    }
                };
                if back != *s {
                    return Certificate::new(
                        "double/restrict_half bijection",
                        cases,
                        Some(format!("restrict_half(double({s})) = {back}")),
                    );
                }
            }
            let doubles: std::collections::HashSet<OrdinalMap> =
                halves.iter().map(|s| s.double()).collect();
            if doubles.len() != halves.len() || symmetric.iter().any(|t| !doubles.contains(t)) {
                return Certificate::new(
                    "double/restrict_half bijection",
                    cases,
                    Some(format!(
                        "symmetric maps [{}]->[{}]: {} of them, {} doubles",
                        2 * m + 1,
                        2 * n + 1,
                        symmetric.len(),
                        doubles.len()
                    )),
                );
            }
        }
    }
    Certificate::new(
        format!("double/restrict_half bijection, tops <= ({max_m}, {max_n})"),
        cases,
        None,
    )
}

/// Exhaustively certify `double(f . g) = double(f) . double(g)` for all
/// composable pairs with tops at most `max_top`.
pub fn verify_double_functorial(max_top: usize) -> Certificate {
    let mut pairs = Vec::new();
    for n in 0..=max_top {
        for m in 0..=max_top {
            for l in 0..=max_top {
                for f in OrdinalMap::enumerate_all(m, n) {
                    for g in OrdinalMap::enumerate_all(l, m) {
                        pairs.push((f.clone(), g));
                    }
                }
            }
        }
    }
    let cases = pairs.len() as u64;
    let failure = par::first_failure(&pairs, |(f, g)| {
        let lhs = f.compose(g).expect("composable by construction").double();
        let rhs = f
            .double()
            .compose(&g.double())
            .expect("doubles are composable");
        (lhs != rhs).then(|| format!("double({f} . {g}) = {lhs} but composite of doubles = {rhs}"))
    });
    Certificate::new(
        format!("double functoriality, tops <= {max_top}"),
        cases,
        failure,
    )
}

/// Certify that every `zero_elimination(m, i)` with `m <= max_m` is a
/// symmetric strictly increasing injection.
pub fn verify_zero_elimination(max_m: usize) -> Certificate {
    let mut cases = 0u64;
    for m in 1..=max_m {
        for i in 0..=m {
            cases += 1;
            let u = match zero_elimination(m, i) {
                Ok(u) => u,
                Err(e) => {
                    return Certificate::new(
                        "zero_elimination symmetry",
                        cases,
                        Some(format!("zero_elimination({m}, {i}) failed: {e}")),
                    )
                }
            };
            let strictly_increasing = u.values().windows(2).all(|w| w[0] < w[1]);
            if !u.is_symmetric() || !strictly_increasing {
                return Certificate::new(
                    "zero_elimination symmetry",
                    cases,
                    Some(format!("zero_elimination({m}, {i}) = {u}")),
                );
            }
        }
    }
    Certificate::new(format!("zero_elimination symmetry, m <= {max_m}"), cases, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn construction_rejects_bad_values() {
        assert!(OrdinalMap::new(2, vec![0, 3]).is_err());
        assert!(OrdinalMap::new(2, vec![1, 0]).is_err());
        assert!(OrdinalMap::new(2, vec![]).is_err());
        assert!(OrdinalMap::new(0, vec![0, 0, 0]).is_ok());
    }

    #[test]
    fn compose_examples() {
        let outer = OrdinalMap::new(2, vec![0, 2, 2]).unwrap();
        let inner = OrdinalMap::new(2, vec![1, 2]).unwrap();
        let composite = outer.compose(&inner).unwrap();
        assert_eq!(composite, OrdinalMap::new(2, vec![2, 2]).unwrap());

        let id = OrdinalMap::identity(3);
        let f = OrdinalMap::new(3, vec![0, 0, 2]).unwrap();
        assert_eq!(id.compose(&f).unwrap(), f);
        assert_eq!(f.compose(&OrdinalMap::identity(2)).unwrap(), f);

        assert!(outer.compose(&OrdinalMap::identity(3)).is_err());
    }

    #[test]
    fn elementary_maps() {
        assert_eq!(OrdinalMap::coface(0, 2).values(), &[1, 2]);
        assert_eq!(OrdinalMap::coface(2, 2).values(), &[0, 1]);
        assert_eq!(OrdinalMap::codegeneracy(0, 1).values(), &[0, 0, 1]);
        assert_eq!(OrdinalMap::codegeneracy(1, 1).values(), &[0, 1, 1]);
    }

    #[test]
    fn factorize_examples() {
        let id = OrdinalMap::identity(3);
        let f = id.factorize();
        assert!(f.degeneracies.is_empty());
        assert!(f.faces.is_empty());

        let delta1 = OrdinalMap::coface(1, 3);
        let f = delta1.factorize();
        assert_eq!(f.faces, vec![1]);
        assert!(f.degeneracies.is_empty());

        let collapse = OrdinalMap::new(1, vec![0, 0]).unwrap();
        let f = collapse.factorize();
        assert_eq!(f.degeneracies, vec![0]);
        assert_eq!(f.faces, vec![1]);
        assert_eq!(f.recompose(), collapse);
    }

    #[test]
    fn factorization_round_trips_exhaustively() {
        let cert = verify_factorization(4, 4);
        assert!(cert.passed(), "{cert}");
        // sum over m,n <= 4 of (m+n+1 choose m+1)
        assert_eq!(cert.cases, 456);
    }

    #[test]
    fn double_examples() {
        let id0 = OrdinalMap::identity(0);
        assert_eq!(id0.double(), OrdinalMap::identity(1));

        let delta0 = OrdinalMap::coface(0, 1);
        assert_eq!(delta0.double().values(), &[1, 2]);

        let sigma0 = OrdinalMap::codegeneracy(0, 0);
        assert_eq!(sigma0.double().values(), &[0, 0, 1, 1]);
    }

    #[test]
    fn double_of_coface_is_zero_elimination() {
        for q in 1..=5 {
            for i in 0..=q {
                let doubled = OrdinalMap::coface(i, q).double();
                assert_eq!(doubled, zero_elimination(q, i).unwrap());
            }
        }
    }

    #[test]
    fn symmetry_examples() {
        assert!(OrdinalMap::identity(3).is_symmetric());
        assert!(!OrdinalMap::new(3, vec![0, 1, 2, 2]).unwrap().is_symmetric());
        assert!(!OrdinalMap::identity(2).is_symmetric());
        assert!(OrdinalMap::new(3, vec![1, 1, 2, 2]).unwrap().is_symmetric());
    }

    #[test]
    fn restrict_half_examples() {
        let id3 = OrdinalMap::identity(3);
        assert_eq!(id3.restrict_half().unwrap(), OrdinalMap::identity(1));

        let t = OrdinalMap::new(3, vec![1, 2]).unwrap();
        assert_eq!(t.restrict_half().unwrap(), OrdinalMap::coface(0, 1));

        assert!(OrdinalMap::identity(2).restrict_half().is_err());
    }

    #[test]
    fn double_bijection_exhaustive() {
        let cert = verify_double_bijection(4, 4);
        assert!(cert.passed(), "{cert}");
    }

    #[test]
    fn double_functorial_exhaustive() {
        let cert = verify_double_functorial(3);
        assert!(cert.passed(), "{cert}");
    }

    #[test]
    fn zero_elimination_examples() {
        assert_eq!(zero_elimination(1, 0).unwrap().values(), &[1, 2]);
        assert_eq!(zero_elimination(1, 1).unwrap().values(), &[0, 3]);
        assert_eq!(zero_elimination(2, 1).unwrap().values(), &[0, 2, 3, 5]);
        assert!(zero_elimination(0, 0).is_err());
        assert!(zero_elimination(2, 3).is_err());
    }

    #[test]
    fn zero_elimination_symmetric_exhaustive() {
        let cert = verify_zero_elimination(5);
        assert!(cert.passed(), "{cert}");
    }

    #[test]
    fn conjugate_swaps_coface_index() {
        for n in 1..=4 {
            for i in 0..=n {
                assert_eq!(OrdinalMap::coface(i, n).conjugate(), OrdinalMap::coface(n - i, n));
            }
        }
        for n in 0..=3 {
            for j in 0..=n {
                assert_eq!(
                    OrdinalMap::codegeneracy(j, n).conjugate(),
                    OrdinalMap::codegeneracy(n - j, n)
                );
            }
        }
    }

    #[test]
    fn conjugate_is_an_involution_and_detects_symmetry() {
        for m in 0..=3 {
            for n in 0..=3 {
                for f in OrdinalMap::enumerate_all(m, n) {
                    assert_eq!(f.conjugate().conjugate(), f);
                    if m % 2 == 1 && n % 2 == 1 {
                        assert_eq!(f.is_symmetric(), f.conjugate() == f);
                    }
                }
            }
        }
    }

    #[test]
    fn enumerate_all_counts() {
        // maps [m] -> [n] are (m+n+1 choose m+1) many
        assert_eq!(OrdinalMap::enumerate_all(1, 1).len(), 3);
        assert_eq!(OrdinalMap::enumerate_all(2, 1).len(), 4);
        assert_eq!(OrdinalMap::enumerate_all(1, 2).len(), 6);
        assert_eq!(OrdinalMap::enumerate_all(4, 4).len(), 126);
    }

    fn arb_ordinal_map(max_top: usize) -> impl Strategy<Value = OrdinalMap> {
        (0..=max_top, 0..=max_top).prop_flat_map(|(m, n)| {
            proptest::collection::vec(0..=n, m + 1).prop_map(move |mut values| {
                values.sort_unstable();
                OrdinalMap::new(n, values).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn prop_factorize_recomposes(f in arb_ordinal_map(8)) {
            prop_assert_eq!(f.factorize().recompose(), f);
        }

        #[test]
        fn prop_double_is_symmetric_and_restricts(f in arb_ordinal_map(8)) {
            let d = f.double();
            prop_assert!(d.is_symmetric());
            prop_assert_eq!(d.restrict_half().unwrap(), f);
        }

        #[test]
        fn prop_conjugate_involutive(f in arb_ordinal_map(8)) {
            prop_assert_eq!(f.conjugate().conjugate(), f);
        }
    }
}
