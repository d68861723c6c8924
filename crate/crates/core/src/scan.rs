//! Exhaustive enumeration of small diameter-4 intersection arrays.
//!
//! Each array passes through the checks in a fixed order: structure, integral
//! `k_i`, parity of `n k`, five distinct eigenvalues, integral multiplicities,
//! and finally the spectral predicates. The first failing check ends the
//! pipeline for that array. Surviving arrays are only candidates: none of
//! these conditions guarantees that a graph exists.

use std::collections::BTreeMap;
use std::fmt::{self, Write};

use num_rational::Ratio;
use rayon::prelude::*;

use crate::array::{check_structure, distance_sizes, write_array, IntersectionArray};
use crate::criteria::{condition1, condition2, lemma_antipodal, AntipodalLemma, Condition1, Condition2};
use crate::error::{ArrayError, ScanError, SpectrumError};
use crate::interval::Verdict;
use crate::spectrum::{eigenvalues_with, multiplicities_with, Precision, Spectrum};

pub const K_MAX_LIMIT: u64 = 64;
pub const N_MAX_LIMIT: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tag {
    SdrgAntipodalCandidate,
    SdrgNonAntipodalCandidate,
    DrgCandidateOnly,
    Infeasible,
}

impl Tag {
    pub const ALL: [Tag; 4] = [
        Tag::SdrgAntipodalCandidate,
        Tag::SdrgNonAntipodalCandidate,
        Tag::DrgCandidateOnly,
        Tag::Infeasible,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Tag::SdrgAntipodalCandidate => "sdrg-antipodal-candidate",
            Tag::SdrgNonAntipodalCandidate => "sdrg-nonantipodal-candidate",
            Tag::DrgCandidateOnly => "drg-candidate-only",
            Tag::Infeasible => "infeasible",
        }
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The first check an array failed.
#[derive(Debug, Clone, PartialEq)]
pub enum Rejection {
    NonIntegralK(ArrayError),
    OddEdgeCount,
    Eigenvalues(SpectrumError),
    Multiplicities(SpectrumError),
}

impl Rejection {
    pub fn check(&self) -> &'static str {
        match self {
            Rejection::NonIntegralK(_) => "k_i",
            Rejection::OddEdgeCount => "parity",
            Rejection::Eigenvalues(_) => "eigenvalues",
            Rejection::Multiplicities(_) => "multiplicities",
        }
    }
}

/// Predicates evaluated on a feasible array.
#[derive(Debug, Clone, PartialEq)]
pub struct Verdicts {
    pub spectrum: Spectrum,
    pub condition1: Condition1,
    pub condition2: Condition2,
    pub lemma_a: AntipodalLemma,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanRecord {
    pub b: [u64; 4],
    pub c: [u64; 4],
    /// `n = sum k_i`, possibly fractional for arrays with non-integral `k_i`.
    pub n: Ratio<u128>,
    pub outcome: Result<Verdicts, Rejection>,
}

impl ScanRecord {
    pub fn array(&self) -> Option<IntersectionArray> {
        IntersectionArray::new(self.b, self.c).ok()
    }

    pub fn is_feasible(&self) -> bool {
        self.outcome.is_ok()
    }

    pub fn verdicts(&self) -> Option<&Verdicts> {
        self.outcome.as_ref().ok()
    }

    /// Condition 1 and condition 2 both yes, or condition 1 yes and condition
    /// 2 no; anything undecided stays in `drg-candidate-only`.
    pub fn tag(&self) -> Tag {
        match &self.outcome {
            Err(_) => Tag::Infeasible,
            Ok(v) => match (v.condition1.verdict, v.condition2.verdict) {
                (Verdict::Yes, Verdict::Yes) => Tag::SdrgAntipodalCandidate,
                (Verdict::Yes, Verdict::No) => Tag::SdrgNonAntipodalCandidate,
                _ => Tag::DrgCandidateOnly,
            },
        }
    }

    pub fn has_undecided(&self) -> bool {
        self.verdicts().is_some_and(|v| {
            v.condition1.verdict == Verdict::Undecided
                || (v.condition1.verdict == Verdict::Yes && v.condition2.verdict == Verdict::Undecided)
        })
    }

    /// Array text followed by tab-separated `key=value` fields.
    pub fn to_line(&self) -> String {
        let mut out = String::new();
        let _ = write_array(&mut out, &self.b, &self.c);
        let _ = write!(out, "\tn={}", self.n);
        let _ = write!(out, "\tfeasible={}", if self.is_feasible() { "yes" } else { "no" });
        match &self.outcome {
            Err(r) => {
                let _ = write!(out, "\tfailed={}", r.check());
                for key in ["spectrum", "condition1", "condition2", "lemma_a"] {
                    let _ = write!(out, "\t{key}=-");
                }
            }
            Ok(v) => {
                let spectrum = v
                    .spectrum
                    .eigenvalues()
                    .iter()
                    .zip(v.spectrum.multiplicities())
                    .map(|(e, m)| format!("{e}^{m}"))
                    .collect::<Vec<_>>()
                    .join(",");
                let _ = write!(out, "\tfailed=-\tspectrum={spectrum}");
                let _ = write!(out, "\tcondition1={}", v.condition1.verdict);
                let _ = write!(
                    out,
                    "\tcondition2={}({})",
                    v.condition2.verdict,
                    v.condition2.disjunct.as_str()
                );
                let _ = write!(out, "\tlemma_a={}", v.lemma_a);
            }
        }
        let _ = write!(out, "\ttag={}", self.tag());
        out
    }
}

fn evaluate(b: [u64; 4], c: [u64; 4], n: Ratio<u128>, precision: &Precision) -> ScanRecord {
    let outcome = (|| {
        let ia = IntersectionArray::new(b, c).map_err(Rejection::NonIntegralK)?;
        if !(ia.vertex_count() as u128 * ia.k() as u128).is_multiple_of(2) {
            return Err(Rejection::OddEdgeCount);
        }
        let eigs = eigenvalues_with(&ia, precision).map_err(Rejection::Eigenvalues)?;
        let m = multiplicities_with(&ia, &eigs, precision).map_err(Rejection::Multiplicities)?;
        let spectrum = Spectrum::new(eigs, m).map_err(Rejection::Multiplicities)?;
        let eigs = spectrum.eigenvalues();
        Ok(Verdicts {
            condition1: condition1(eigs, ia.b1()),
            condition2: condition2(eigs, ia.k(), ia.a1()),
            lemma_a: lemma_antipodal(&spectrum),
            spectrum,
        })
    })();
    ScanRecord { b, c, n, outcome }
}

/// Arrays with leading entry `b0` that pass the structural checks and have
/// `n <= n_max`, in lexicographic order on `(b1, b2, b3, c2, c3, c4)`.
fn arrays_with_degree(b0: u64, n_max: u64) -> Vec<([u64; 4], [u64; 4], Ratio<u128>)> {
    let limit = Ratio::from_integer(n_max as u128);
    let mut out = Vec::new();
    for b1 in 1..=b0 {
        for b2 in 1..=b1 {
            for b3 in 1..=b2 {
                for c2 in 1..=b0 {
                    // k_0 + k_1 + k_2 only grows with the later entries
                    let partial = Ratio::from_integer(1 + b0 as u128)
                        + Ratio::new(b0 as u128 * b1 as u128, c2 as u128);
                    if partial > limit {
                        continue;
                    }
                    for c3 in c2..=b0 {
                        for c4 in c3..=b0 {
                            let (b, c) = ([b0, b1, b2, b3], [1, c2, c3, c4]);
                            if check_structure(&b, &c).is_err() {
                                continue;
                            }
                            let Ok(k) = distance_sizes(&b, &c) else {
                                continue;
                            };
                            let n: Ratio<u128> = k.iter().sum();
                            if n <= limit {
                                out.push((b, c, n));
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

fn check_bounds(k_max: u64, n_max: u64) -> Result<(), ScanError> {
    if !(2..=K_MAX_LIMIT).contains(&k_max) {
        return Err(ScanError::KMax(k_max));
    }
    if !(1..=N_MAX_LIMIT).contains(&n_max) {
        return Err(ScanError::NMax(n_max));
    }
    Ok(())
}

/// Every structurally valid array with `b0 <= k_max` and `n <= n_max`, one
/// record each, ordered lexicographically on `(b0, b1, b2, b3, c2, c3, c4)`.
pub fn scan(k_max: u64, n_max: u64) -> Result<Vec<ScanRecord>, ScanError> {
    scan_with(k_max, n_max, &Precision::default())
}

pub fn scan_with(k_max: u64, n_max: u64, precision: &Precision) -> Result<Vec<ScanRecord>, ScanError> {
    check_bounds(k_max, n_max)?;
    let per_degree: Vec<Vec<ScanRecord>> = (1..=k_max)
        .into_par_iter()
        .map(|b0| {
            arrays_with_degree(b0, n_max)
                .into_par_iter()
                .map(|(b, c, n)| evaluate(b, c, n, precision))
                .collect()
        })
        .collect();
    Ok(per_degree.into_iter().flatten().collect())
}

/// Per-tag counts, the full list of condition-1-but-not-condition-2 arrays,
/// and any arrays the predicates could not settle.
pub fn open_question_report(records: &[ScanRecord], bounds: Option<(u64, u64)>) -> String {
    let mut counts: BTreeMap<Tag, usize> = Tag::ALL.iter().map(|&t| (t, 0)).collect();
    for r in records {
        *counts.entry(r.tag()).or_default() += 1;
    }
    let mut out = String::new();
    let _ = writeln!(out, "records {}", records.len());
    for (tag, count) in &counts {
        let _ = writeln!(out, "{tag} {count}");
    }
    let witnesses: Vec<&ScanRecord> = records
        .iter()
        .filter(|r| r.tag() == Tag::SdrgNonAntipodalCandidate)
        .collect();
    let scope = match bounds {
        Some((k, n)) => format!("up to (k_max={k}, n_max={n})"),
        None => "in this record set".to_string(),
    };
    if witnesses.is_empty() {
        let _ = writeln!(
            out,
            "condition1 without condition2: no such array found {scope}"
        );
    } else {
        let _ = writeln!(
            out,
            "condition1 without condition2: {} array(s) found {scope}",
            witnesses.len()
        );
        for w in witnesses {
            let _ = writeln!(out, "witness {}", w.to_line());
        }
    }
    for r in records.iter().filter(|r| r.has_undecided()) {
        let _ = writeln!(out, "undecided {}", r.to_line());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn find<'a>(records: &'a [ScanRecord], s: &str) -> &'a ScanRecord {
        let (b, c) = crate::array::parse_rows(s).unwrap();
        records
            .iter()
            .find(|r| r.b == b && r.c == c)
            .unwrap_or_else(|| panic!("{s} missing"))
    }

    #[test]
    fn small_scan_finds_the_known_arrays() {
        let records = scan(5, 200).unwrap();
        assert_eq!(find(&records, "4 3 2 1 ; 1 2 3 4").tag(), Tag::SdrgAntipodalCandidate);
        assert_eq!(find(&records, "2 1 1 1 ; 1 1 1 2").tag(), Tag::SdrgAntipodalCandidate);
        let o5 = find(&records, "5 4 4 3 ; 1 1 2 2");
        assert_eq!(o5.tag(), Tag::DrgCandidateOnly);
        assert_eq!(o5.verdicts().unwrap().condition1.verdict, Verdict::No);
    }

    #[test]
    fn order_is_lexicographic() {
        let records = scan(4, 100).unwrap();
        let keys: Vec<_> = records
            .iter()
            .map(|r| (r.b[0], r.b[1], r.b[2], r.b[3], r.c[1], r.c[2], r.c[3]))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert_eq!(scan(4, 100).unwrap(), records);
    }

    #[test]
    fn non_integral_k_is_rejected_before_the_spectrum() {
        let records = scan(3, 100).unwrap();
        let r = find(&records, "3 2 1 1 ; 1 2 2 3");
        assert!(matches!(r.outcome, Err(Rejection::NonIntegralK(_))));
        assert!(r.to_line().contains("failed=k_i"));
    }

    #[test]
    fn report_counts_partition_the_records() {
        let records = scan(4, 100).unwrap();
        let report = open_question_report(&records, Some((4, 100)));
        let total: usize = report
            .lines()
            .filter(|l| Tag::ALL.iter().any(|t| l.starts_with(t.as_str())))
            .map(|l| l.rsplit(' ').next().unwrap().parse::<usize>().unwrap())
            .sum();
        assert_eq!(total, records.len());
        assert!(report.contains("no such array found up to (k_max=4, n_max=100)"));
    }

    #[test]
    fn empty_report() {
        let report = open_question_report(&[], None);
        assert!(report.starts_with("records 0\n"));
        assert!(Tag::ALL.iter().all(|t| report.contains(&format!("{t} 0\n"))));
    }

    #[test]
    fn bounds_are_enforced() {
        assert_eq!(scan(1, 10), Err(ScanError::KMax(1)));
        assert_eq!(scan(65, 10), Err(ScanError::KMax(65)));
        assert_eq!(scan(4, 0), Err(ScanError::NMax(0)));
        assert_eq!(scan(4, 1_000_001), Err(ScanError::NMax(1_000_001)));
    }
}
