//! Exhaustive structural sweeps returning [`Certificate`]s.
//!
//! Sweeps treat an internal operator error the same as a mismatch: either way
//! the certificate carries a counterexample naming the level, the operators,
//! and the simplex. Per-level sweeps run in parallel over simplices; the
//! reported counterexample is the one at the smallest case index.

use crate::cert::Certificate;
use crate::error::Error;
use crate::monoid::TwistedMonoid;
use crate::ordinal::OrdinalMap;
use crate::par;
use crate::simplicial::bar::BarSigma;
use crate::simplicial::{InvolutiveSimplicialSet, Simplex, SimplicialSet};

fn guard_through<S: SimplicialSet + ?Sized>(s: &S, through: usize) -> Result<(), Error> {
    if through > s.truncation() {
        return Err(Error::Truncation { needed: through, available: s.truncation() });
    }
    Ok(())
}

/// Checks the five elementary identities on every simplex through level
/// `through`: `d_i d_j = d_{j-1} d_i` for `i < j`, `s_i s_j = s_{j+1} s_i`
/// for `i <= j`, and the three mixed `d_i s_j` cases. Composites that would
/// overrun the truncation are skipped, not failed.
pub fn verify_simplicial_identities<S: SimplicialSet + Sync>(
    s: &S,
    through: usize,
) -> Result<Certificate, Error> {
    guard_through(s, through)?;
    let label = format!("simplicial-identities({})", s.label());
    let trunc = s.truncation();
    let mut cases = 0u64;
    for n in 0..=through {
        let level = s.level(n)?;
        let mut per_simplex = 0u64;
        if n >= 2 {
            per_simplex += (n * (n + 1) / 2) as u64;
        }
        if n + 2 <= trunc {
            per_simplex += ((n + 1) * (n + 2) / 2) as u64;
        }
        if n < trunc {
            per_simplex += ((n + 1) * (n + 2)) as u64;
        }
        cases += per_simplex * level.len() as u64;

        let check = |x: &Simplex| -> Option<String> {
            let run = || -> Result<Option<String>, Error> {
                if n >= 2 {
                    for j in 1..=n {
                        for i in 0..j {
                            let lhs = s.face(i, &s.face(j, x)?)?;
                            let rhs = s.face(j - 1, &s.face(i, x)?)?;
                            if lhs != rhs {
                                return Ok(Some(format!(
                                    "d{i} d{j} = d{} d{i} fails at {x}",
                                    j - 1
                                )));
                            }
                        }
                    }
                }
                if n + 2 <= trunc {
                    for j in 0..=n {
                        for i in 0..=j {
                            let lhs = s.degeneracy(i, &s.degeneracy(j, x)?)?;
                            let rhs = s.degeneracy(j + 1, &s.degeneracy(i, x)?)?;
                            if lhs != rhs {
                                return Ok(Some(format!(
                                    "s{i} s{j} = s{} s{i} fails at {x}",
                                    j + 1
                                )));
                            }
                        }
                    }
                }
                if n < trunc {
                    for j in 0..=n {
                        for i in 0..=n + 1 {
                            let lhs = s.face(i, &s.degeneracy(j, x)?)?;
                            let rhs = if i < j {
                                s.degeneracy(j - 1, &s.face(i, x)?)?
                            } else if i == j || i == j + 1 {
                                x.clone()
                            } else {
                                s.degeneracy(j, &s.face(i - 1, x)?)?
                            };
                            if lhs != rhs {
                                return Ok(Some(format!("d{i} s{j} relation fails at {x}")));
                            }
                        }
                    }
                }
                Ok(None)
            };
            run().unwrap_or_else(|e| Some(format!("operator failure at {x}: {e}")))
        };
        if let Some(c) = par::first_failure(&level, check) {
            return Ok(Certificate::new(label, cases, Some(format!("level {n}: {c}"))));
        }
    }
    Ok(Certificate::new(label, cases, None))
}

/// Checks that the involution squares to the identity and is twisted against
/// the elementary operators: `tau d_i = d_{n-i} tau` and
/// `tau s_j = s_{n-j} tau` on every simplex through level `through`.
pub fn verify_twisted_axioms<S: InvolutiveSimplicialSet + Sync>(
    s: &S,
    through: usize,
) -> Result<Certificate, Error> {
    verify_involution(s, through, true)
}

/// Checks that the involution squares to the identity and commutes with the
/// elementary operators index-for-index: `tau d_i = d_i tau` and
/// `tau s_j = s_j tau`. This is the shape the subdivided involution takes,
/// where every induced operator is its own mirror image.
pub fn verify_commuting_involution<S: InvolutiveSimplicialSet + Sync>(
    s: &S,
    through: usize,
) -> Result<Certificate, Error> {
    verify_involution(s, through, false)
}

fn verify_involution<S: InvolutiveSimplicialSet + Sync>(
    s: &S,
    through: usize,
    twisted: bool,
) -> Result<Certificate, Error> {
    guard_through(s, through)?;
    let kind = if twisted { "twisted-axioms" } else { "commuting-involution" };
    let label = format!("{kind}({})", s.label());
    let trunc = s.truncation();
    let mut cases = 0u64;
    for n in 0..=through {
        let level = s.level(n)?;
        let mut per_simplex = 1u64;
        if n >= 1 {
            per_simplex += (n + 1) as u64;
        }
        if n < trunc {
            per_simplex += (n + 1) as u64;
        }
        cases += per_simplex * level.len() as u64;

        let check = |x: &Simplex| -> Option<String> {
            let run = || -> Result<Option<String>, Error> {
                let tx = s.involution(x)?;
                if s.involution(&tx)? != *x {
                    return Ok(Some(format!("involution does not square to id at {x}")));
                }
                if n >= 1 {
                    for i in 0..=n {
                        let mirror = if twisted { n - i } else { i };
                        let lhs = s.involution(&s.face(i, x)?)?;
                        let rhs = s.face(mirror, &tx)?;
                        if lhs != rhs {
                            return Ok(Some(format!(
                                "tau d{i} = d{mirror} tau fails at {x}"
                            )));
                        }
                    }
                }
                if n < trunc {
                    for j in 0..=n {
                        let mirror = if twisted { n - j } else { j };
                        let lhs = s.involution(&s.degeneracy(j, x)?)?;
                        let rhs = s.degeneracy(mirror, &tx)?;
                        if lhs != rhs {
                            return Ok(Some(format!(
                                "tau s{j} = s{mirror} tau fails at {x}"
                            )));
                        }
                    }
                }
                Ok(None)
            };
            run().unwrap_or_else(|e| Some(format!("operator failure at {x}: {e}")))
        };
        if let Some(c) = par::first_failure(&level, check) {
            return Ok(Certificate::new(label, cases, Some(format!("level {n}: {c}"))));
        }
    }
    Ok(Certificate::new(label, cases, None))
}

/// The generalized conjugate law: for every ordinal map `alpha: [m] -> [n]`
/// with `m <= max_domain_top` and `n <= through`, and every level-`n`
/// simplex, acting by the conjugate and then applying the involution equals
/// applying the involution and then acting by `alpha`.
pub fn verify_conjugate_law<S: InvolutiveSimplicialSet + Sync>(
    s: &S,
    max_domain_top: usize,
    through: usize,
) -> Result<Certificate, Error> {
    guard_through(s, through)?;
    let label = format!("conjugate-law({})", s.label());
    let top = max_domain_top.min(s.truncation());
    let mut cases = 0u64;
    for n in 0..=through {
        let level = s.level(n)?;
        for m in 0..=top {
            let maps = OrdinalMap::enumerate_all(m, n);
            cases += (maps.len() * level.len()) as u64;
            let check = |x: &Simplex| -> Option<String> {
                let run = || -> Result<Option<String>, Error> {
                    let tx = s.involution(x)?;
                    for alpha in &maps {
                        let lhs = s.involution(&s.act(&alpha.conjugate(), x)?)?;
                        let rhs = s.act(alpha, &tx)?;
                        if lhs != rhs {
                            return Ok(Some(format!("alpha = {alpha} at {x}")));
                        }
                    }
                    Ok(None)
                };
                run().unwrap_or_else(|e| Some(format!("operator failure at {x}: {e}")))
            };
            if let Some(c) = par::first_failure(&level, check) {
                return Ok(Certificate::new(label, cases, Some(format!("level {n}: {c}"))));
            }
        }
    }
    Ok(Certificate::new(label, cases, None))
}

/// Symmetric ordinal maps carry involution-fixed bar simplices to
/// involution-fixed bar simplices. Sweeps every symmetric `t: [m] -> [n]`
/// with odd tops up to `max_top` over every fixed simplex at level `n`.
pub fn verify_symmetric_fixed_closure(
    monoid: &TwistedMonoid,
    max_top: usize,
) -> Result<Certificate, Error> {
    let bar = BarSigma::new(monoid.clone(), max_top);
    let label = format!("symmetric-fixed-closure({})", bar.label());
    let mut cases = 0u64;
    for n in (1..=max_top).step_by(2) {
        let fixed = bar.fixed_level(n)?;
        for m in (1..=max_top).step_by(2) {
            let symmetric: Vec<OrdinalMap> = OrdinalMap::enumerate_all(m, n)
                .into_iter()
                .filter(OrdinalMap::is_symmetric)
                .collect();
            cases += (symmetric.len() * fixed.len()) as u64;
            let check = |x: &Simplex| -> Option<String> {
                let run = || -> Result<Option<String>, Error> {
                    for t in &symmetric {
                        let y = bar.act(t, x)?;
                        if bar.involution(&y)? != y {
                            return Ok(Some(format!("t = {t} sends {x} to unfixed {y}")));
                        }
                    }
                    Ok(None)
                };
                run().unwrap_or_else(|e| Some(format!("operator failure at {x}: {e}")))
            };
            if let Some(c) = par::first_failure(&fixed, check) {
                return Ok(Certificate::new(label, cases, Some(format!("level {n}: {c}"))));
            }
        }
    }
    Ok(Certificate::new(label, cases, None))
}
