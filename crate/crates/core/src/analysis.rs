//! End-to-end analysis of a graph: direct combinatorial checks on one side,
//! spectral predicates computed from the intersection array on the other,
//! and a cross-check that both sides agree.

use std::fmt::Write;

use crate::array::IntersectionArray;
use crate::criteria::{
    condition1, condition2, corollary_bipartite, lemma_antipodal, lemma_sdrg, pair_identities,
    AntipodalLemma, Condition1, Condition2, CorollaryResult, LemmaBResult, PairIdentities,
};
use crate::distance::{distance_graph_from, distances, is_bipartite};
use crate::error::{AntipodalError, DrgError, SpectrumError, SrgError};
use crate::format::render_interval;
use crate::graph::Graph;
use crate::interval::{Interval, Verdict};
use crate::spectrum::{Precision, Spectrum};
use crate::structure::{antipodal_fibres_from, drg_parameters_from, srg_params, FibrePartition, SrgParams};

/// Placeholder for fields that do not apply to the input.
pub const SKIPPED: &str = "-";

/// Spectral side of an analysis, available once a valid diameter-4 array is known.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralVerdicts {
    pub spectrum: Spectrum,
    pub antipodal: AntipodalLemma,
    pub lemma: LemmaBResult,
    pub condition1: Condition1,
    pub condition2: Condition2,
    pub identities: PairIdentities,
    pub corollary: Option<CorollaryResult>,
}

impl SpectralVerdicts {
    pub fn compute(ia: &IntersectionArray, precision: &Precision) -> Result<Self, SpectrumError> {
        let spectrum = Spectrum::from_array_with(ia, precision)?;
        let eigs = spectrum.eigenvalues();
        Ok(Self {
            antipodal: lemma_antipodal(&spectrum),
            lemma: lemma_sdrg(&spectrum),
            condition1: condition1(eigs, ia.b1()),
            condition2: condition2(eigs, ia.k(), ia.a1()),
            identities: pair_identities(&spectrum, ia.b1()),
            corollary: corollary_bipartite(ia, &spectrum).ok(),
            spectrum,
        })
    }

    /// Whether the algebraically linked identities agree with each other:
    /// each `m_i pi_i` pair matches its inner-product form and the shifted
    /// product of the complementary eigenvalue pair.
    pub fn identities_agree(&self) -> bool {
        let p = &self.identities;
        let pairs = [
            (p.odd_moment, p.odd_inner),
            (p.even_moment, p.even_inner),
            (p.odd_moment, p.even_product),
            (p.even_moment, p.odd_product),
            (p.antipodal_moment, p.antipodal_inner),
        ];
        pairs
            .iter()
            .all(|&(a, b)| a != Verdict::Undecided && a == b)
    }
}

/// Result of [`analyze`].
#[derive(Debug, Clone, PartialEq)]
pub struct AnalysisReport {
    pub source: String,
    pub vertices: usize,
    pub edges: usize,
    pub connected: bool,
    pub diameter: Option<u32>,
    pub drg: Option<Result<String, DrgError>>,
    pub intersection_array: Option<IntersectionArray>,
    pub bipartite: bool,
    pub antipodal_direct: Option<Result<FibrePartition, AntipodalError>>,
    pub sdrg_direct: Option<Result<SrgParams, SrgError>>,
    pub spectral: Option<Result<SpectralVerdicts, SpectrumError>>,
    pub notes: Vec<String>,
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn join_intervals<'a>(xs: impl IntoIterator<Item = &'a Interval>) -> String {
    xs.into_iter().map(render_interval).collect::<Vec<_>>().join(" ")
}

/// Runs every direct check and, for diameter-4 distance-regular graphs,
/// every spectral predicate.
pub fn analyze(g: &Graph, source: &str) -> AnalysisReport {
    analyze_with(g, source, &Precision::default())
}

pub fn analyze_with(g: &Graph, source: &str, precision: &Precision) -> AnalysisReport {
    let data = distances(g);
    let mut report = AnalysisReport {
        source: source.to_string(),
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        connected: data.is_connected(),
        diameter: data.is_connected().then(|| data.diameter()),
        drg: None,
        intersection_array: None,
        bipartite: is_bipartite(g).is_bipartite(),
        antipodal_direct: None,
        sdrg_direct: None,
        spectral: None,
        notes: Vec::new(),
    };
    if !report.connected {
        report.notes.push("graph is not connected".into());
        return report;
    }
    let params = drg_parameters_from(g, &data);
    report.drg = Some(params.as_ref().map(ToString::to_string).map_err(Clone::clone));
    let Ok(params) = params else {
        report.notes.push("not distance-regular; spectral predicates skipped".into());
        return report;
    };
    if data.diameter() != 4 {
        report.notes.push(format!(
            "diameter {} != 4; diameter-4 predicates skipped",
            data.diameter()
        ));
        return report;
    }
    let ia = params.to_diameter_four().expect("diameter checked above");
    report.intersection_array = Some(ia);
    report.antipodal_direct = Some(antipodal_fibres_from(&data));
    let g4 = distance_graph_from(&data, 4).expect("diameter is 4");
    report.sdrg_direct = Some(srg_params(&g4));
    let spectral = SpectralVerdicts::compute(&ia, precision);
    if let Err(e) = &spectral {
        report.notes.push(format!("spectrum: {e}"));
    }
    report.spectral = Some(spectral);
    if report.consistency() == Some(false) {
        report.notes.push("spectral verdicts disagree with the direct checks".into());
    }
    report
}

impl AnalysisReport {
    pub fn is_drg(&self) -> bool {
        matches!(self.drg, Some(Ok(_)))
    }

    pub fn antipodal_r(&self) -> Option<usize> {
        match &self.antipodal_direct {
            Some(Ok(p)) => Some(p.r),
            _ => None,
        }
    }

    pub fn sdrg(&self) -> Option<bool> {
        self.sdrg_direct.as_ref().map(|r| r.is_ok())
    }

    /// `None` when no diameter-4 comparison applies. Otherwise `true` exactly
    /// when every spectral verdict is decided and matches its direct
    /// counterpart:
    ///
    /// * condition 1 and the `m_i pi_i` pattern hold iff `G_4` is strongly regular,
    /// * the antipodal multiplicity pattern holds iff the graph is antipodal,
    ///   with the same `r`,
    /// * when condition 1 holds, condition 2 holds iff the graph is antipodal,
    /// * the linked pair identities agree.
    pub fn consistency(&self) -> Option<bool> {
        let spectral = self.spectral.as_ref()?;
        let Ok(s) = spectral else {
            return Some(false);
        };
        let sdrg = self.sdrg()?;
        let antipodal_r = self.antipodal_r();
        let decided = |v: Verdict| (v != Verdict::Undecided).then_some(v.is_yes());

        let Some(c1) = decided(s.condition1.verdict) else {
            return Some(false);
        };
        let Some(lemma) = decided(s.lemma.holds) else {
            return Some(false);
        };
        let lemma_r = match s.antipodal {
            AntipodalLemma::Holds { r } => Some(r as usize),
            AntipodalLemma::Fails { .. } => None,
            AntipodalLemma::Undecided { .. } => return Some(false),
        };
        let mut ok = c1 == sdrg && lemma == sdrg && lemma_r == antipodal_r;
        if c1 {
            match decided(s.condition2.verdict) {
                Some(c2) => ok &= c2 == antipodal_r.is_some(),
                None => return Some(false),
            }
        }
        Some(ok && s.identities_agree())
    }

    /// Ordered `(key, value)` pairs; the key set and order never change.
    pub fn fields(&self) -> Vec<(&'static str, String)> {
        let skip = || SKIPPED.to_string();
        let mut f: Vec<(&'static str, String)> = vec![
            ("source", self.source.clone()),
            ("vertices", self.vertices.to_string()),
            ("edges", self.edges.to_string()),
            ("connected", yes_no(self.connected).into()),
            ("diameter", self.diameter.map_or_else(skip, |d| d.to_string())),
        ];
        f.push((
            "is_drg",
            match &self.drg {
                None => skip(),
                Some(r) => yes_no(r.is_ok()).into(),
            },
        ));
        f.push((
            "drg_array",
            match &self.drg {
                Some(Ok(s)) => s.clone(),
                Some(Err(e)) => e.to_string(),
                None => skip(),
            },
        ));
        f.push((
            "intersection_array",
            self.intersection_array.map_or_else(skip, |a| a.to_string()),
        ));
        f.push(("is_bipartite", yes_no(self.bipartite).into()));

        let spectral = match &self.spectral {
            Some(Ok(s)) => Some(s),
            _ => None,
        };
        let spec = spectral.map(|s| &s.spectrum);
        f.push((
            "eigenvalues",
            spec.map_or_else(skip, |s| {
                s.eigenvalues().iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
            }),
        ));
        f.push((
            "multiplicities",
            spec.map_or_else(skip, |s| {
                s.multiplicities().iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
            }),
        ));
        f.push((
            "pi_products",
            spec.map_or_else(skip, |s| join_intervals(&s.pi_products())),
        ));

        f.push((
            "antipodal_direct",
            self.antipodal_direct
                .as_ref()
                .map_or_else(skip, |r| yes_no(r.is_ok()).into()),
        ));
        f.push(("antipodal_r", self.antipodal_r().map_or_else(skip, |r| r.to_string())));
        f.push((
            "antipodal_witness",
            match &self.antipodal_direct {
                Some(Err(e)) => e.to_string(),
                _ => skip(),
            },
        ));
        f.push((
            "antipodal_spectral",
            spectral.map_or_else(skip, |s| s.antipodal.verdict().to_string()),
        ));
        f.push((
            "antipodal_spectral_r",
            spectral
                .and_then(|s| s.antipodal.r())
                .map_or_else(skip, |r| r.to_string()),
        ));

        f.push(("sdrg_direct", self.sdrg().map_or_else(skip, |b| yes_no(b).into())));
        f.push((
            "srg_params",
            match &self.sdrg_direct {
                Some(Ok(p)) => p.to_string(),
                _ => skip(),
            },
        ));
        f.push((
            "sdrg_witness",
            match &self.sdrg_direct {
                Some(Err(e)) => e.to_string(),
                _ => skip(),
            },
        ));
        f.push(("sdrg_spectral", spectral.map_or_else(skip, |s| s.lemma.holds.to_string())));
        f.push((
            "lemma_alpha",
            spectral.map_or_else(skip, |s| {
                join_intervals([&s.lemma.alpha, &s.lemma.alpha_other])
            }),
        ));
        f.push((
            "lemma_beta",
            spectral.map_or_else(skip, |s| join_intervals([&s.lemma.beta, &s.lemma.beta_other])),
        ));

        f.push(("condition1", spectral.map_or_else(skip, |s| s.condition1.verdict.to_string())));
        f.push((
            "condition1_odd_product",
            spectral.map_or_else(skip, |s| render_interval(&s.condition1.odd_product)),
        ));
        f.push((
            "condition1_even_product",
            spectral.map_or_else(skip, |s| render_interval(&s.condition1.even_product)),
        ));
        f.push((
            "condition1_target",
            spectral.map_or_else(skip, |s| s.condition1.target.to_string()),
        ));
        f.push(("condition2", spectral.map_or_else(skip, |s| s.condition2.verdict.to_string())));
        f.push((
            "condition2_disjunct",
            spectral.map_or_else(skip, |s| s.condition2.disjunct.as_str().to_string()),
        ));
        f.push((
            "condition2_product",
            spectral.map_or_else(skip, |s| render_interval(&s.condition2.product)),
        ));
        f.push((
            "condition2_sum",
            spectral.map_or_else(skip, |s| render_interval(&s.condition2.sum)),
        ));
        f.push((
            "corollary_bipartite",
            spectral
                .and_then(|s| s.corollary.as_ref())
                .map_or_else(skip, |c| c.verdict.to_string()),
        ));
        f.push((
            "consistency",
            self.consistency().map_or_else(skip, |b| b.to_string()),
        ));
        f.push((
            "notes",
            if self.notes.is_empty() {
                skip()
            } else {
                self.notes.join("; ")
            },
        ));
        f
    }

    /// One `key=value` line per field.
    pub fn to_machine(&self) -> String {
        let mut out = String::new();
        for (k, v) in self.fields() {
            let _ = writeln!(out, "{k}={v}");
        }
        out
    }

    /// Aligned human-readable rendering.
    pub fn to_text(&self) -> String {
        let fields = self.fields();
        let width = fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, v) in fields {
            let _ = writeln!(out, "{k:<width$}  {v}");
        }
        out
    }
}

/// Ordered `(key, value)` pairs of the spectral predicates of an array.
pub fn check_fields(
    ia: &IntersectionArray,
    precision: &Precision,
) -> Result<Vec<(String, String)>, SpectrumError> {
    let s = SpectralVerdicts::compute(ia, precision)?;
    let mut f: Vec<(String, String)> = vec![
        ("array".into(), ia.to_string()),
        ("n".into(), ia.vertex_count().to_string()),
    ];
    for (i, (e, m)) in s.spectrum.eigenvalues().iter().zip(s.spectrum.multiplicities()).enumerate() {
        f.push((format!("lambda_{i}"), e.to_string()));
        f.push((format!("multiplicity_{i}"), m.to_string()));
    }
    let c1 = &s.condition1;
    f.push(("condition1".into(), c1.verdict.to_string()));
    f.push(("condition1_odd_product".into(), render_interval(&c1.odd_product)));
    f.push(("condition1_even_product".into(), render_interval(&c1.even_product)));
    f.push(("condition1_target".into(), c1.target.to_string()));
    let c2 = &s.condition2;
    f.push(("condition2".into(), c2.verdict.to_string()));
    f.push(("condition2_disjunct".into(), c2.disjunct.as_str().into()));
    f.push(("condition2_product".into(), render_interval(&c2.product)));
    f.push(("condition2_sum".into(), render_interval(&c2.sum)));
    let l = &s.lemma;
    f.push(("lemma_sdrg".into(), l.holds.to_string()));
    f.push(("lemma_alpha".into(), join_intervals([&l.alpha, &l.alpha_other])));
    f.push(("lemma_beta".into(), join_intervals([&l.beta, &l.beta_other])));
    f.push(("lemma_antipodal".into(), s.antipodal.verdict().to_string()));
    f.push((
        "lemma_antipodal_r".into(),
        s.antipodal.r().map_or_else(|| SKIPPED.to_string(), |r| r.to_string()),
    ));
    f.push((
        "corollary_bipartite".into(),
        s.corollary
            .as_ref()
            .map_or_else(|| SKIPPED.to_string(), |c| c.verdict.to_string()),
    ));
    Ok(f)
}

/// Spectral predicate report for an intersection array on its own.
pub fn check_report(ia: &IntersectionArray, precision: &Precision) -> Result<String, SpectrumError> {
    let s = SpectralVerdicts::compute(ia, precision)?;
    let mut out = String::new();
    let w = &mut out;
    let _ = writeln!(w, "array {ia}");
    let _ = writeln!(w, "n {}", ia.vertex_count());
    let _ = writeln!(w, "{}", s.spectrum.report_lines().trim_end());
    let c1 = &s.condition1;
    let _ = writeln!(
        w,
        "condition1 {} (1+l1)(1+l3)={} (1+l2)(1+l4)={} target={}",
        c1.verdict,
        render_interval(&c1.odd_product),
        render_interval(&c1.even_product),
        c1.target
    );
    let c2 = &s.condition2;
    let _ = writeln!(
        w,
        "condition2 {} disjunct={} l1*l3={} (target -{}) l1+l3={} (target {})",
        c2.verdict,
        c2.disjunct.as_str(),
        render_interval(&c2.product),
        ia.k(),
        render_interval(&c2.sum),
        ia.a1()
    );
    let l = &s.lemma;
    let _ = writeln!(
        w,
        "lemma_sdrg {} m1pi1={} m3pi3={} m2pi2={} m4pi4={}",
        l.holds,
        render_interval(&l.alpha),
        render_interval(&l.alpha_other),
        render_interval(&l.beta),
        render_interval(&l.beta_other)
    );
    let _ = writeln!(w, "lemma_antipodal {} {}", s.antipodal.verdict(), s.antipodal);
    match &s.corollary {
        Some(c) => {
            let predicted = c.predicted.map_or_else(
                || SKIPPED.to_string(),
                |p| p.iter().map(u64::to_string).collect::<Vec<_>>().join(" "),
            );
            let _ = writeln!(w, "corollary_bipartite {} predicted={predicted}", c.verdict);
        }
        None => {
            let _ = writeln!(w, "corollary_bipartite {SKIPPED}");
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle, hypercube, kneser};

    fn value<'a>(fields: &'a [(&'static str, String)], key: &str) -> &'a str {
        &fields.iter().find(|(k, _)| *k == key).unwrap().1
    }

    #[test]
    fn q4_is_consistent_sdrg_and_antipodal() {
        let r = analyze(&hypercube(4).unwrap(), "Q4");
        assert_eq!(r.consistency(), Some(true));
        let f = r.fields();
        assert_eq!(value(&f, "sdrg_direct"), "yes");
        assert_eq!(value(&f, "antipodal_r"), "2");
        assert_eq!(value(&f, "condition1"), "yes");
        assert_eq!(value(&f, "is_bipartite"), "yes");
        assert_eq!(value(&f, "srg_params"), "(16, 1, 0, 0)");
    }

    #[test]
    fn c8_is_consistent() {
        let r = analyze(&cycle(8).unwrap(), "C8");
        assert_eq!(r.consistency(), Some(true));
        assert_eq!(r.antipodal_r(), Some(2));
    }

    #[test]
    fn odd_graph_is_consistent_and_not_sdrg() {
        let r = analyze(&kneser(9, 4).unwrap(), "O5");
        assert!(r.is_drg());
        assert_eq!(r.sdrg(), Some(false));
        assert_eq!(r.consistency(), Some(true));
        let f = r.fields();
        assert_eq!(value(&f, "condition1"), "no");
        assert_eq!(value(&f, "condition1_odd_product"), "-4");
        assert_eq!(value(&f, "condition1_even_product"), "-6");
    }

    #[test]
    fn petersen_gets_a_partial_report() {
        let r = analyze(&kneser(5, 2).unwrap(), "petersen");
        assert!(r.is_drg());
        assert_eq!(r.consistency(), None);
        assert!(r.notes[0].contains("diameter 2"));
        let f = r.fields();
        assert_eq!(value(&f, "condition1"), SKIPPED);
        assert_eq!(value(&f, "drg_array"), "3 2 ; 1 1");
    }

    #[test]
    fn field_order_is_the_same_for_partial_reports() {
        let full: Vec<_> = analyze(&cycle(8).unwrap(), "a").fields().into_iter().map(|(k, _)| k).collect();
        let partial: Vec<_> = analyze(&cycle(5).unwrap(), "b").fields().into_iter().map(|(k, _)| k).collect();
        assert_eq!(full, partial);
    }

    #[test]
    fn disconnected_graphs_are_reported() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let r = analyze(&g, "two edges");
        assert!(!r.connected);
        assert_eq!(r.consistency(), None);
        assert!(r.to_machine().contains("connected=no\n"));
    }

    #[test]
    fn check_report_lists_both_products() {
        let text = check_report(&"5 4 4 3 ; 1 1 2 2".parse().unwrap(), &Precision::default()).unwrap();
        assert!(text.contains("condition1 no (1+l1)(1+l3)=-4 (1+l2)(1+l4)=-6 target=-4"));
    }
}
