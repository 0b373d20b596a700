//! Exhaustive verification suites comparing the closed-form machinery with
//! brute-force poset oracles.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::kerov::{kerov_map, KerovImage};
use crate::moves::{moves, predecessors_general, predecessors_orthogonal};
use crate::order::{bruhat_leq, involution_of, leq_placement, RankMatrix};
use crate::poset::build_poset;
use crate::roots::{enumerate_placements, placement_count, Kind, RookPlacement, Root};

/// `|R(n)|` and `|I(n)|` for `n = 1..=7`.
pub const BELL: [u128; 7] = [1, 2, 5, 15, 52, 203, 877];
pub const INVOLUTIONS: [u128; 7] = [1, 2, 4, 10, 26, 76, 232];

const MAX_REPORTED_FAILURES: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    CoversGeneral,
    CoversOrthogonal,
    Kerov,
    Graded,
    Bruhat,
    Counts,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::CoversGeneral,
        Suite::CoversOrthogonal,
        Suite::Kerov,
        Suite::Graded,
        Suite::Bruhat,
        Suite::Counts,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::CoversGeneral => "covers-general",
            Suite::CoversOrthogonal => "covers-orthogonal",
            Suite::Kerov => "kerov",
            Suite::Graded => "graded",
            Suite::Bruhat => "bruhat",
            Suite::Counts => "counts",
        }
    }

    /// Largest ambient size checked by default.
    pub fn default_max_n(self) -> usize {
        match self {
            Suite::CoversGeneral => 6,
            Suite::CoversOrthogonal => 7,
            Suite::Kerov => 5,
            Suite::Graded => 7,
            Suite::Bruhat => 6,
            Suite::Counts => 7,
        }
    }

    pub fn run(self, max_n: Option<usize>) -> Result<SuiteReport> {
        let max_n = max_n.unwrap_or(self.default_max_n());
        let checks = match self {
            Suite::CoversGeneral => covers_checks(Kind::General, 3..=max_n)?,
            Suite::CoversOrthogonal => covers_checks(Kind::Orthogonal, 3..=max_n)?,
            Suite::Kerov => kerov_checks(3..=max_n)?,
            Suite::Graded => vec![
                graded_check(Kind::General, 2..=max_n.saturating_sub(1))?,
                graded_check(Kind::Orthogonal, 2..=max_n)?,
            ],
            Suite::Bruhat => vec![bruhat_check(3..=max_n)?],
            Suite::Counts => counts_checks(1..=max_n)?,
        };
        Ok(SuiteReport {
            suite: self,
            max_n,
            checks,
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse {
                token: s.to_string(),
                reason: format!(
                    "unknown suite; expected one of {}",
                    Suite::ALL.map(Suite::name).join(", ")
                ),
            })
    }
}

/// Outcome of one named property over a number of instances.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub instances: usize,
    pub failure_count: usize,
    /// The first few failures, described.
    pub failures: Vec<String>,
}

impl Check {
    fn new(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            instances: 0,
            failure_count: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < MAX_REPORTED_FAILURES {
                self.failures.push(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "[{verdict}] {}: {} instances, {} failures",
            self.name, self.instances, self.failure_count
        )?;
        for failure in &self.failures {
            write!(f, "\n    {failure}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub max_n: usize,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {} (max n = {})", self.suite, self.max_n)?;
        for check in &self.checks {
            writeln!(f, "{check}")?;
        }
        write!(f, "{}", if self.passed() { "verified" } else { "FAILED" })
    }
}

/// Independent oracle: every subset of the positive roots, filtered by the
/// placement conditions.
pub fn brute_force_placements(n: usize, kind: Kind) -> Vec<RookPlacement> {
    let roots: Vec<Root> = (2..=n)
        .flat_map(|i| (1..i).map(move |j| Root::new(i, j).unwrap()))
        .collect();
    assert!(roots.len() < 32, "subset oracle is limited to n <= 8");
    let mut out = Vec::new();
    for mask in 0u32..(1 << roots.len()) {
        let subset = roots
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &r)| r);
        if let Ok(d) = RookPlacement::new(n, subset) {
            if kind == Kind::General || d.is_orthogonal() {
                out.push(d);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Compares generated predecessors with the oracle covers for every element
/// of `R(n)` / `I(n)` and checks each move for soundness.
pub fn covers_checks(kind: Kind, ns: impl IntoIterator<Item = usize>) -> Result<Vec<Check>> {
    let mut check = Check::new(format!("predecessors_{kind} == oracle covers"));
    let mut sound = Check::new("every move result is a smaller valid placement");
    for n in ns {
        let poset = build_poset(n, kind)?;
        for d in poset.elements() {
            let generated = match kind {
                Kind::General => predecessors_general(d),
                Kind::Orthogonal => predecessors_orthogonal(d)?,
            };
            let oracle = poset.brute_force_covers(d)?;
            let all_moves = moves(d, kind)?;
            check.record(generated == oracle, || {
                let missing: Vec<String> = oracle
                    .iter()
                    .filter(|t| !generated.contains(t))
                    .map(ToString::to_string)
                    .collect();
                let spurious: Vec<String> = all_moves
                    .iter()
                    .filter(|m| !oracle.contains(&m.result))
                    .map(ToString::to_string)
                    .collect();
                format!(
                    "n={n} D={d}: missing [{}], spurious moves [{}]",
                    missing.join(" | "),
                    spurious.join(" | ")
                )
            });
            for m in &all_moves {
                let smaller = m.result != *d && leq_placement(&m.result, d)?;
                let delta = m.result.len() as isize - d.len() as isize == m.kind.size_delta();
                let closed = kind == Kind::General || m.result.is_orthogonal();
                sound.record(smaller && delta && closed, || {
                    format!(
                        "n={n} D={d} move {m}: smaller={smaller} size_delta_ok={delta} orthogonal_ok={closed}"
                    )
                });
            }
        }
    }
    Ok(vec![check, sound])
}

pub fn kerov_checks(ns: impl IntoIterator<Item = usize> + Clone) -> Result<Vec<Check>> {
    let mut shape = Check::new("K(D) is orthogonal with even rows and odd columns; K injective");
    let mut order = Check::new("T <= D iff K(T) <= K(D)");
    let mut covers = Check::new("T covered by D iff K(T) covered by K(D)");
    for n in ns {
        let elements = enumerate_placements(n, Kind::General)?;
        let images: Vec<KerovImage> = elements.iter().map(KerovImage::of).collect::<Result<_>>()?;
        let mut distinct: Vec<&RookPlacement> = images.iter().map(|k| &k.image).collect();
        distinct.sort_unstable();
        distinct.dedup();
        shape.record(distinct.len() == images.len(), || {
            format!("n={n}: K is not injective")
        });
        for k in &images {
            shape.record(k.image.is_orthogonal() && k.has_kerov_shape(), || {
                format!("n={n} D={} K(D)={}", k.source, k.image)
            });
        }
        let matrices: Vec<RankMatrix> = elements.iter().map(RankMatrix::of).collect();
        let image_matrices: Vec<RankMatrix> =
            images.iter().map(|k| RankMatrix::of(&k.image)).collect();
        let general_preds: Vec<Vec<RookPlacement>> =
            elements.iter().map(predecessors_general).collect();
        let image_preds: Vec<Vec<RookPlacement>> = images
            .iter()
            .map(|k| predecessors_orthogonal(&k.image))
            .collect::<Result<_>>()?;
        for (a, t) in elements.iter().enumerate() {
            for (b, d) in elements.iter().enumerate() {
                let direct = matrices[a].dominated_by(&matrices[b])?;
                let mapped = image_matrices[a].dominated_by(&image_matrices[b])?;
                order.record(direct == mapped, || {
                    format!("n={n} T={t} D={d}: T<=D is {direct}, K(T)<=K(D) is {mapped}")
                });
                let direct = general_preds[b].contains(t);
                let mapped = image_preds[b].contains(&images[a].image);
                covers.record(direct == mapped, || {
                    format!(
                        "n={n} T={t} D={d}: T in L_R(D) is {direct}, K(T) in L_I(K(D)) is {mapped}"
                    )
                });
            }
        }
    }
    Ok(vec![shape, order, covers])
}

pub fn graded_check(kind: Kind, ns: impl IntoIterator<Item = usize>) -> Result<Check> {
    let formula = match kind {
        Kind::General => "(l(w_K(D)) + |D|)/2",
        Kind::Orthogonal => "(l(w_D) + |D|)/2",
    };
    let mut check = Check::new(format!("{kind} posets graded with rank {formula}"));
    for n in ns {
        let poset = build_poset(n, kind)?;
        let report = poset.check_graded();
        let ok = report.is_graded && report.formula_checked && report.formula_mismatches.is_empty();
        check.record(ok, || {
            format!(
                "n={n}: graded={} witness={:?} rank mismatches={:?}",
                report.is_graded,
                report.witness,
                report
                    .formula_mismatches
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
            )
        });
    }
    Ok(check)
}

pub fn bruhat_check(ns: impl IntoIterator<Item = usize>) -> Result<Check> {
    let mut check = Check::new("D1 <= D2 iff w_D1 <= w_D2 in Bruhat order on I(n)");
    for n in ns {
        let elements = enumerate_placements(n, Kind::Orthogonal)?;
        let perms = elements
            .iter()
            .map(involution_of)
            .collect::<Result<Vec<_>>>()?;
        let matrices: Vec<RankMatrix> = elements.iter().map(RankMatrix::of).collect();
        for a in 0..elements.len() {
            for b in 0..elements.len() {
                let placement = matrices[a].dominated_by(&matrices[b])?;
                let bruhat = bruhat_leq(&perms[a], &perms[b])?;
                check.record(placement == bruhat, || {
                    format!(
                        "n={n} {} vs {}: placement {placement}, bruhat {bruhat}",
                        elements[a], elements[b]
                    )
                });
            }
        }
    }
    Ok(check)
}

pub fn counts_checks(ns: impl IntoIterator<Item = usize>) -> Result<Vec<Check>> {
    let mut table = Check::new("|R(n)| and |I(n)| match Bell and involution numbers");
    let mut oracle = Check::new("enumeration equals subset-filter oracle (n <= 5)");
    let mut nested = Check::new("I(n) is a subset of R(n)");
    for n in ns {
        for kind in [Kind::General, Kind::Orthogonal] {
            let listed = enumerate_placements(n, kind)?;
            let expected = match (kind, n) {
                (Kind::General, 1..=7) => BELL[n - 1],
                (Kind::Orthogonal, 1..=7) => INVOLUTIONS[n - 1],
                _ => placement_count(n, kind),
            };
            table.record(listed.len() as u128 == expected, || {
                format!(
                    "n={n} {kind}: enumerated {}, expected {expected}",
                    listed.len()
                )
            });
            if n <= 5 {
                oracle.record(listed == brute_force_placements(n, kind), || {
                    format!("n={n} {kind}: enumeration differs from subset oracle")
                });
            }
        }
        let general = enumerate_placements(n, Kind::General)?;
        let orthogonal = enumerate_placements(n, Kind::Orthogonal)?;
        nested.record(
            orthogonal.iter().all(|d| general.binary_search(d).is_ok()),
            || format!("n={n}: an orthogonal placement is missing from R(n)"),
        );
    }
    Ok(vec![table, oracle, nested])
}

/// `K` applied to every predecessor of `D` lands among the predecessors of `K(D)`.
pub fn kerov_images_of_predecessors(d: &RookPlacement) -> Result<bool> {
    let image_preds = predecessors_orthogonal(&kerov_map(d)?)?;
    predecessors_general(d)
        .iter()
        .map(kerov_map)
        .try_fold(true, |ok, t| Ok(ok && image_preds.contains(&t?)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn subset_oracle_counts() {
        assert_eq!(brute_force_placements(3, Kind::General).len(), 5);
        assert_eq!(brute_force_placements(4, Kind::Orthogonal).len(), 10);
        assert_eq!(
            brute_force_placements(1, Kind::General),
            vec![RookPlacement::empty(1)]
        );
    }

    #[test]
    fn small_suites_pass() {
        for suite in Suite::ALL {
            let report = suite.run(Some(4)).unwrap();
            assert!(report.passed(), "{report}");
        }
    }
}
