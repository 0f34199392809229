//! Maps between simplicial sets and their exhaustive verification.

use crate::error::Error;
use crate::simplicial::bar::BarSigma;
use crate::simplicial::fixed::FixedBar;
use crate::simplicial::two_sided::TwoSidedBar;
use crate::simplicial::{Simplex, SimplicialSet};
use std::collections::HashSet;

type Assignment<'a> = Box<dyn Fn(&Simplex) -> Result<Simplex, Error> + 'a>;

/// A levelwise function between two complexes of equal truncation.
pub struct SimplicialMap<'a> {
    label: String,
    source: &'a dyn SimplicialSet,
    target: &'a dyn SimplicialSet,
    claims_bijection: bool,
    apply: Assignment<'a>,
}

impl<'a> SimplicialMap<'a> {
    pub fn new(
        label: impl Into<String>,
        source: &'a dyn SimplicialSet,
        target: &'a dyn SimplicialSet,
        claims_bijection: bool,
        apply: impl Fn(&Simplex) -> Result<Simplex, Error> + 'a,
    ) -> Result<Self, Error> {
        if source.truncation() != target.truncation() {
            return Err(Error::dim(format!(
                "map endpoints carry truncations {} and {}",
                source.truncation(),
                target.truncation()
            )));
        }
        Ok(SimplicialMap {
            label: label.into(),
            source,
            target,
            claims_bijection,
            apply: Box::new(apply),
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn source(&self) -> &dyn SimplicialSet {
        self.source
    }

    pub fn target(&self) -> &dyn SimplicialSet {
        self.target
    }

    pub fn apply(&self, x: &Simplex) -> Result<Simplex, Error> {
        (self.apply)(x)
    }
}

/// Outcome of an exhaustive map check: per-level sizes, the number of
/// elementary checks performed, and the first failure if any.
#[derive(Debug, Clone)]
pub struct MapCertificate {
    pub label: String,
    pub level_sizes: Vec<(u64, u64)>,
    pub cases: u64,
    pub counterexample: Option<String>,
}

impl MapCertificate {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl std::fmt::Display for MapCertificate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.counterexample {
            None => write!(f, "{}: pass ({} checks)", self.label, self.cases),
            Some(c) => write!(f, "{}: FAIL ({})", self.label, c),
        }
    }
}

/// Exhaustively checks the map through level `through`: images land at the
/// right level, bijectivity holds where claimed, and the map commutes with
/// every face and degeneracy. Operator failures inside the complexes are
/// genuine errors; a commutation mismatch is reported in the certificate.
pub fn verify_simplicial_map(
    map: &SimplicialMap<'_>,
    through: usize,
) -> Result<MapCertificate, Error> {
    let source = map.source();
    let target = map.target();
    if through > source.truncation() {
        return Err(Error::Truncation { needed: through, available: source.truncation() });
    }
    let mut cert = MapCertificate {
        label: map.label().to_string(),
        level_sizes: Vec::new(),
        cases: 0,
        counterexample: None,
    };
    for n in 0..=through {
        let src = source.level(n)?;
        let tgt = target.level(n)?;
        cert.level_sizes.push((src.len() as u64, tgt.len() as u64));

        let mut images = Vec::with_capacity(src.len());
        for x in &src {
            let y = map.apply(x)?;
            if y.level() != n {
                cert.counterexample = Some(format!("{x} maps across levels to {y}"));
                return Ok(cert);
            }
            images.push(y);
        }

        if map.claims_bijection {
            cert.cases += 1;
            let image_set: HashSet<&Simplex> = images.iter().collect();
            let target_set: HashSet<&Simplex> = tgt.iter().collect();
            if image_set.len() != images.len() {
                cert.counterexample = Some(format!("level {n}: images collide"));
                return Ok(cert);
            }
            if image_set != target_set {
                cert.counterexample =
                    Some(format!("level {n}: image does not exhaust the target level"));
                return Ok(cert);
            }
        }

        for (x, y) in src.iter().zip(&images) {
            if n >= 1 {
                for i in 0..=n {
                    cert.cases += 1;
                    let via_source = map.apply(&source.face(i, x)?)?;
                    let via_target = target.face(i, y)?;
                    if via_source != via_target {
                        cert.counterexample = Some(format!(
                            "face {i} at {x}: {via_source} vs {via_target}"
                        ));
                        return Ok(cert);
                    }
                }
            }
            if n < through {
                for j in 0..=n {
                    cert.cases += 1;
                    let via_source = map.apply(&source.degeneracy(j, x)?)?;
                    let via_target = target.degeneracy(j, y)?;
                    if via_source != via_target {
                        cert.counterexample = Some(format!(
                            "degeneracy {j} at {x}: {via_source} vs {via_target}"
                        ));
                        return Ok(cert);
                    }
                }
            }
        }
    }
    Ok(cert)
}

fn check_same_monoid(a: &BarSigma, b: &TwoSidedBar) -> Result<(), Error> {
    if a.monoid() != b.monoid() {
        return Err(Error::dim("map endpoints are over different monoids".to_string()));
    }
    Ok(())
}

/// The fixed-point identification: a palindromic simplex
/// `(a_1, ..., a_q, b, tau(a_q), ..., tau(a_1))` is determined by its first
/// `q + 1` entries, which form a two-sided bar simplex.
pub fn eta<'a>(
    source: &'a FixedBar,
    target: &'a TwoSidedBar,
) -> Result<SimplicialMap<'a>, Error> {
    check_same_monoid(source.ambient().inner(), target)?;
    SimplicialMap::new("eta", source, target, true, |x| {
        Ok(Simplex::new(x.level(), x.data()[..=x.level()].to_vec()))
    })
}

/// Negative control: the identification with its first two level-1 images
/// swapped. Still a levelwise bijection, so a verification failure isolates
/// operator commutation.
pub fn eta_corrupted<'a>(
    source: &'a FixedBar,
    target: &'a TwoSidedBar,
) -> Result<SimplicialMap<'a>, Error> {
    check_same_monoid(source.ambient().inner(), target)?;
    let level1 = source.level(1)?;
    if level1.len() < 2 {
        return Err(Error::domain(
            "corruption needs at least two level-1 simplices".to_string(),
        ));
    }
    let honest = |x: &Simplex| Simplex::new(x.level(), x.data()[..=x.level()].to_vec());
    let (first, second) = (level1[0].clone(), level1[1].clone());
    SimplicialMap::new("eta-corrupted", source, target, true, move |x| {
        if *x == first {
            Ok(honest(&second))
        } else if *x == second {
            Ok(honest(&first))
        } else {
            Ok(honest(x))
        }
    })
}

/// Collapse of the module slot: `(a_1, ..., a_n, m) -> (a_1, ..., a_n)`.
/// Commutes with every degeneracy and with faces below the top index; the
/// top face acts on the module slot only on the source side.
pub fn project_two_sided<'a>(
    source: &'a TwoSidedBar,
    target: &'a BarSigma,
) -> Result<SimplicialMap<'a>, Error> {
    check_same_monoid(target, source)?;
    SimplicialMap::new("project", source, target, false, |x| {
        Ok(Simplex::new(x.level(), x.data()[..x.level()].to_vec()))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid;

    #[test]
    fn eta_truncates_payloads() {
        let m = monoid::cyclic_group(4).unwrap();
        let f = FixedBar::new(m.clone(), 2);
        let t = TwoSidedBar::new(m, 2);
        let map = eta(&f, &t).unwrap();
        assert_eq!(
            map.apply(&Simplex::new(0, vec![2])).unwrap(),
            Simplex::new(0, vec![2])
        );
        assert_eq!(
            map.apply(&Simplex::new(1, vec![1, 2, 3])).unwrap(),
            Simplex::new(1, vec![1, 2])
        );
    }

    #[test]
    fn eta_naturality_instance() {
        // both routes from (g, g^2, g^3) land on (g^2)
        let m = monoid::cyclic_group(4).unwrap();
        let f = FixedBar::new(m.clone(), 1);
        let t = TwoSidedBar::new(m, 1);
        let map = eta(&f, &t).unwrap();
        let x = Simplex::new(1, vec![1, 2, 3]);
        let via_source = map.apply(&f.face(1, &x).unwrap()).unwrap();
        let via_target = t.face(1, &map.apply(&x).unwrap()).unwrap();
        assert_eq!(via_source, via_target);
        assert_eq!(via_source, Simplex::new(0, vec![2]));
    }

    #[test]
    fn eta_verifies_for_c2_with_expected_level_sizes() {
        let m = monoid::cyclic_group(2).unwrap();
        let f = FixedBar::new(m.clone(), 4);
        let t = TwoSidedBar::new(m, 4);
        let map = eta(&f, &t).unwrap();
        let cert = verify_simplicial_map(&map, 4).unwrap();
        assert!(cert.passed(), "{cert}");
        let sizes: Vec<u64> = cert.level_sizes.iter().map(|&(s, _)| s).collect();
        assert_eq!(sizes, vec![2, 4, 8, 16, 32]);
        for &(s, t) in &cert.level_sizes {
            assert_eq!(s, t);
        }
    }

    #[test]
    fn eta_verifies_for_s3() {
        let m = monoid::symmetric_group_3().unwrap();
        let f = FixedBar::new(m.clone(), 2);
        let t = TwoSidedBar::new(m, 2);
        let map = eta(&f, &t).unwrap();
        let cert = verify_simplicial_map(&map, 2).unwrap();
        assert!(cert.passed(), "{cert}");
    }

    #[test]
    fn corrupted_map_fails_with_counterexample() {
        for m in [
            monoid::cyclic_group(2).unwrap(),
            monoid::cyclic_group(3).unwrap(),
            monoid::boolean_monoid().unwrap(),
        ] {
            let f = FixedBar::new(m.clone(), 2);
            let t = TwoSidedBar::new(m.clone(), 2);
            let map = eta_corrupted(&f, &t).unwrap();
            let cert = verify_simplicial_map(&map, 2).unwrap();
            assert!(!cert.passed(), "corruption slipped through on {}", m.label());
            assert!(cert.counterexample.is_some());
        }
    }

    #[test]
    fn eta_rejects_mismatched_endpoints() {
        let f = FixedBar::new(monoid::cyclic_group(2).unwrap(), 2);
        let t = TwoSidedBar::new(monoid::cyclic_group(3).unwrap(), 2);
        assert!(eta(&f, &t).is_err());

        let t_short = TwoSidedBar::new(monoid::cyclic_group(2).unwrap(), 1);
        assert!(eta(&f, &t_short).is_err());
    }

    #[test]
    fn projection_drops_the_module_slot() {
        let m = monoid::symmetric_group_3().unwrap();
        let t = TwoSidedBar::new(m.clone(), 1);
        let b = BarSigma::new(m, 1);
        let map = project_two_sided(&t, &b).unwrap();
        // ((12),(13)) -> ((12)); a level-0 module element projects to the point
        assert_eq!(
            map.apply(&Simplex::new(1, vec![1, 2])).unwrap(),
            Simplex::new(1, vec![1])
        );
        assert_eq!(
            map.apply(&Simplex::new(0, vec![3])).unwrap(),
            Simplex::new(0, vec![])
        );
    }

    #[test]
    fn projection_commutes_below_the_top_face_and_with_degeneracies() {
        let m = monoid::symmetric_group_3().unwrap();
        let t = TwoSidedBar::new(m.clone(), 3);
        let b = BarSigma::new(m, 3);
        let map = project_two_sided(&t, &b).unwrap();

        for n in 1..=3usize {
            for x in t.level(n).unwrap() {
                let y = map.apply(&x).unwrap();
                for i in 0..n {
                    assert_eq!(
                        map.apply(&t.face(i, &x).unwrap()).unwrap(),
                        b.face(i, &y).unwrap(),
                        "face {i} of {x}"
                    );
                }
            }
        }
        for n in 0..3usize {
            for x in t.level(n).unwrap() {
                let y = map.apply(&x).unwrap();
                for j in 0..=n {
                    assert_eq!(
                        map.apply(&t.degeneracy(j, &x).unwrap()).unwrap(),
                        b.degeneracy(j, &y).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn projection_collapses_fibers_of_module_size() {
        // the top face on the source moves the module slot through the
        // twisted action before the projection forgets it
        let m = monoid::symmetric_group_3().unwrap();
        let fib = m.fixed_points().len() as u64;
        let t = TwoSidedBar::new(m.clone(), 2);
        let b = BarSigma::new(m, 2);
        let map = project_two_sided(&t, &b).unwrap();
        for n in 0..=2usize {
            let mut counts: std::collections::HashMap<Simplex, u64> = Default::default();
            for x in t.level(n).unwrap() {
                *counts.entry(map.apply(&x).unwrap()).or_default() += 1;
            }
            assert_eq!(counts.len() as u64, b.level_size(n).unwrap());
            assert!(counts.values().all(|&c| c == fib));
        }
        // a fiber with distinct module slots witnesses the collapse
        let x = Simplex::new(1, vec![4, 0]);
        let x2 = Simplex::new(1, vec![4, 3]);
        assert_ne!(x, x2);
        assert_eq!(map.apply(&x).unwrap(), map.apply(&x2).unwrap());
    }
}
