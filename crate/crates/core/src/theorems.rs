//! Executable checkers for the structural results on `R⋈I`.
//!
//! Each checker evaluates its hypotheses and conclusion on one concrete
//! instance `(R, I)` and reports [`Status::Verified`], [`Status::Vacuous`]
//! (hypotheses or preconditions fail) or [`Status::Counterexample`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::amalgam::AmalgamRing;
use crate::error::Result;
use crate::graph::{Diameter, Girth, ZdGraph};
use crate::ring::{Elem, FiniteRing, Ideal};
use crate::set::ElemSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TheoremId {
    #[serde(rename = "P2.1a")]
    P2_1a,
    #[serde(rename = "P2.1b")]
    P2_1b,
    #[serde(rename = "P2.2")]
    P2_2,
    #[serde(rename = "R2.3")]
    R2_3,
    #[serde(rename = "P3.1")]
    P3_1,
    #[serde(rename = "P3.2")]
    P3_2,
    #[serde(rename = "C3.3")]
    C3_3,
    #[serde(rename = "C3.4")]
    C3_4,
    #[serde(rename = "L4.5")]
    L4_5,
    #[serde(rename = "T4.8")]
    T4_8,
    #[serde(rename = "L4.9")]
    L4_9,
    #[serde(rename = "C4.10")]
    C4_10,
    #[serde(rename = "P4.11")]
    P4_11,
    #[serde(rename = "T4.12")]
    T4_12,
    #[serde(rename = "P4.13")]
    P4_13,
    #[serde(rename = "C4.14")]
    C4_14,
    #[serde(rename = "L4.15")]
    L4_15,
    #[serde(rename = "P4.16")]
    P4_16,
}

impl TheoremId {
    pub const ALL: [TheoremId; 18] = [
        TheoremId::P2_1a,
        TheoremId::P2_1b,
        TheoremId::P2_2,
        TheoremId::R2_3,
        TheoremId::P3_1,
        TheoremId::P3_2,
        TheoremId::C3_3,
        TheoremId::C3_4,
        TheoremId::L4_5,
        TheoremId::T4_8,
        TheoremId::L4_9,
        TheoremId::C4_10,
        TheoremId::P4_11,
        TheoremId::T4_12,
        TheoremId::P4_13,
        TheoremId::C4_14,
        TheoremId::L4_15,
        TheoremId::P4_16,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::P2_1a => "P2.1a",
            TheoremId::P2_1b => "P2.1b",
            TheoremId::P2_2 => "P2.2",
            TheoremId::R2_3 => "R2.3",
            TheoremId::P3_1 => "P3.1",
            TheoremId::P3_2 => "P3.2",
            TheoremId::C3_3 => "C3.3",
            TheoremId::C3_4 => "C3.4",
            TheoremId::L4_5 => "L4.5",
            TheoremId::T4_8 => "T4.8",
            TheoremId::L4_9 => "L4.9",
            TheoremId::C4_10 => "C4.10",
            TheoremId::P4_11 => "P4.11",
            TheoremId::T4_12 => "T4.12",
            TheoremId::P4_13 => "P4.13",
            TheoremId::C4_14 => "C4.14",
            TheoremId::L4_15 => "L4.15",
            TheoremId::P4_16 => "P4.16",
        }
    }

    /// One-line statement of what the checker evaluates.
    pub fn statement(self) -> &'static str {
        match self {
            TheoremId::P2_1a => "R⋈I reduced iff R reduced; R domain, I≠0 ⇒ minimal primes are O1, O2",
            TheoremId::P2_1b => "I² = 0 iff R⋈I and R(+)I share a multiplication table",
            TheoremId::P2_2 => "Z(R⋈I) = T1 ∪ T2 ∪ T3 ∪ T4",
            TheoremId::R2_3 => "K_{|I|-1,|I|-1} between T1, T2; unit neighbourhoods; Γ(R) embeds via x ↦ (x,0)",
            TheoremId::P3_1 => "R not a domain ⇒ girth Γ(R⋈I) = 3",
            TheoremId::P3_2 => "R domain ⇒ girth 4 if |I| ≥ 3, and |I| = 2 ⇒ I = R ≅ Z2 with girth ∞",
            TheoremId::C3_3 => "girth 3 ⟺ R not domain; 4 ⟺ domain ∧ |I| ≥ 3; ∞ ⟺ I = R ≅ Z2",
            TheoremId::C3_4 => "domain ⟺ girth Γ(R⋈I) ∈ {4,∞} ⟺ two minimal primes O1, O2 ⟺ Γ(R⋈I) complete bipartite",
            TheoremId::L4_5 => "(Z(R⋈I))² = 0 ⟺ (Z(R))² = 0 ∧ I ⊆ Z(R)",
            TheoremId::T4_8 => "Γ(R⋈I) complete ⟺ (Z(R))² = 0 ∧ I ⊆ Z(R) ⟺ (Z(R⋈I))² = 0",
            TheoremId::L4_9 => "R not domain, I ⊄ Z(R), Z(R) ideal ⇒ diam Γ(R⋈I) = 3",
            TheoremId::C4_10 => "I ⊄ Z(R), Γ(R) has a universal vertex ⇒ diam Γ(R⋈I) = 3",
            TheoremId::P4_11 => "diam Γ(R) = 3 ⇒ diam Γ(R⋈I) = 3",
            TheoremId::T4_12 => "Z(R) not an ideal ⇒ diam Γ(R⋈I) = 3",
            TheoremId::P4_13 => "Z(R) ideal, I ⊆ Z(R), Ann(a,b) ≠ 0 on edges, diam Γ(R) = 2 ⇒ diam Γ(R⋈I) = 2",
            TheoremId::C4_14 => "R non-reduced, Z(R) ideal, I ⊆ Z(R), diam Γ(R) = 2 ⇒ diam Γ(R⋈I) = 2",
            TheoremId::L4_15 => "I ⊄ Z(R), diam Γ(R⋈I) = 2 ⇒ Ann(y) ∩ I ≠ 0 for all y ∈ Z(R)∖0",
            TheoremId::P4_16 => "Γ(R⋈I) has a universal vertex ⇒ Z(R) is a prime ideal",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    Verified,
    Vacuous,
    Counterexample,
}

impl Status {
    pub fn from_flags(hypotheses_hold: bool, conclusion_holds: bool) -> Status {
        match (hypotheses_hold, conclusion_holds) {
            (false, _) => Status::Vacuous,
            (true, true) => Status::Verified,
            (true, false) => Status::Counterexample,
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Verified => "Verified",
            Status::Vacuous => "Vacuous",
            Status::Counterexample => "Counterexample",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationOutcome {
    pub theorem: TheoremId,
    pub ring_spec: String,
    pub ideal_members: Vec<String>,
    pub hypotheses_hold: bool,
    pub conclusion_holds: bool,
    pub status: Status,
    /// Values the checker looked at, e.g. `diam Γ(R⋈I) = 3`.
    pub detail: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    /// Why the checker did not apply (unmet precondition).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Everything the checkers need about one `(R, I)`, computed once.
#[derive(Clone, Debug)]
pub struct Instance {
    pub amalgam: AmalgamRing,
    pub base_zd: ElemSet,
    pub amalgam_zd: ElemSet,
    pub base_graph: ZdGraph,
    pub amalgam_graph: ZdGraph,
    /// `None` when the graph is disconnected.
    pub base_diameter: Option<Diameter>,
    pub amalgam_diameter: Option<Diameter>,
    amalgam_far_pair: Option<(usize, usize)>,
    pub base_girth: Girth,
    pub amalgam_girth: Girth,
    pub base_domain: bool,
    pub base_reduced: bool,
    pub amalgam_reduced: bool,
    pub base_zd_is_ideal: bool,
    pub ideal_in_zd: bool,
    pub base_zd_square_zero: bool,
    pub amalgam_zd_square_zero: bool,
    pub amalgam_minimal_primes: Vec<Ideal>,
}

impl Instance {
    pub fn new(base: &FiniteRing, ideal: &Ideal) -> Result<Self> {
        let amalgam = AmalgamRing::amalgamated_duplication(base, ideal)?;
        let a = amalgam.ring();
        let base_zd = base.zero_divisors();
        let amalgam_zd = a.zero_divisors();
        let base_graph = ZdGraph::build(base);
        let amalgam_graph = ZdGraph::build(a);
        let base_diameter = base_graph.diameter().ok();
        let (amalgam_diameter, amalgam_far_pair) = match amalgam_graph.diameter_with_pair() {
            Ok((d, p)) => (Some(d), p),
            Err(_) => (None, None),
        };
        Ok(Instance {
            base_girth: base_graph.girth(),
            amalgam_girth: amalgam_graph.girth(),
            base_domain: base_zd.len() == 1,
            base_reduced: base.is_reduced(),
            amalgam_reduced: a.is_reduced(),
            base_zd_is_ideal: base.is_ideal(&base_zd),
            ideal_in_zd: ideal.members().is_subset(&base_zd),
            base_zd_square_zero: base.set_square_zero(&base_zd),
            amalgam_zd_square_zero: a.set_square_zero(&amalgam_zd),
            amalgam_minimal_primes: a.minimal_primes(),
            amalgam,
            base_zd,
            amalgam_zd,
            base_graph,
            amalgam_graph,
            base_diameter,
            amalgam_diameter,
            amalgam_far_pair,
        })
    }

    pub fn base(&self) -> &FiniteRing {
        self.amalgam.base()
    }

    pub fn ideal(&self) -> &Ideal {
        self.amalgam.ideal()
    }

    pub fn ring(&self) -> &FiniteRing {
        self.amalgam.ring()
    }

    fn outcome(&self, theorem: TheoremId, hyp: bool, concl: bool, detail: String) -> Evaluated<'_> {
        Evaluated {
            inst: self,
            outcome: VerificationOutcome {
                theorem,
                ring_spec: self.base().spec_name().to_string(),
                ideal_members: self.ideal().labels(self.base()),
                hypotheses_hold: hyp,
                conclusion_holds: concl,
                status: Status::from_flags(hyp, concl),
                detail,
                witness: None,
                note: None,
            },
        }
    }

    fn precondition(&self, theorem: TheoremId, note: &str) -> VerificationOutcome {
        let mut o = self.outcome(theorem, false, false, String::new()).outcome;
        o.note = Some(note.to_string());
        o
    }

    fn amalgam_diam_text(&self) -> String {
        let d = diam_text(self.amalgam_diameter);
        match (self.amalgam_diameter, self.amalgam_far_pair) {
            (Some(Diameter::Finite(_)), Some((u, v))) => {
                let l = self.amalgam_graph.labels();
                format!("diam Γ(R⋈I) = {d}, realised by d({},{})", l[u], l[v])
            }
            _ => format!("diam Γ(R⋈I) = {d}"),
        }
    }
}

struct Evaluated<'a> {
    inst: &'a Instance,
    outcome: VerificationOutcome,
}

impl Evaluated<'_> {
    /// Attaches a witness when the outcome is a counterexample.
    fn witness(mut self, make: impl FnOnce(&Instance) -> String) -> VerificationOutcome {
        if self.outcome.status == Status::Counterexample {
            self.outcome.witness = Some(make(self.inst));
        }
        self.outcome
    }

    fn done(self) -> VerificationOutcome {
        let detail = self.outcome.detail.clone();
        self.witness(|_| detail)
    }
}

fn diam_text(d: Option<Diameter>) -> String {
    d.map_or_else(|| "disconnected".to_string(), |d| d.to_string())
}

fn diam_is(d: Option<Diameter>, k: usize) -> bool {
    d == Some(Diameter::Finite(k))
}

const NONZERO_IDEAL: &str = "precondition I ≠ {0} not met";

pub type Checker = fn(&Instance) -> VerificationOutcome;

/// The registry, in `TheoremId` order.
pub const CHECKERS: [(TheoremId, Checker); 18] = [
    (TheoremId::P2_1a, check_p2_1a),
    (TheoremId::P2_1b, check_p2_1b),
    (TheoremId::P2_2, check_p2_2),
    (TheoremId::R2_3, check_r2_3),
    (TheoremId::P3_1, check_p3_1),
    (TheoremId::P3_2, check_p3_2),
    (TheoremId::C3_3, check_c3_3),
    (TheoremId::C3_4, check_c3_4),
    (TheoremId::L4_5, check_l4_5),
    (TheoremId::T4_8, check_t4_8),
    (TheoremId::L4_9, check_l4_9),
    (TheoremId::C4_10, check_c4_10),
    (TheoremId::P4_11, check_p4_11),
    (TheoremId::T4_12, check_t4_12),
    (TheoremId::P4_13, check_p4_13),
    (TheoremId::C4_14, check_c4_14),
    (TheoremId::L4_15, check_l4_15),
    (TheoremId::P4_16, check_p4_16),
];

pub fn checker(id: TheoremId) -> Checker {
    CHECKERS
        .iter()
        .find(|(t, _)| *t == id)
        .map(|(_, c)| *c)
        .expect("every theorem is registered")
}

pub fn check(id: TheoremId, base: &FiniteRing, ideal: &Ideal) -> Result<VerificationOutcome> {
    Ok(checker(id)(&Instance::new(base, ideal)?))
}

/// Applies every registered checker once, in `TheoremId` order.
pub fn run_all(base: &FiniteRing, ideal: &Ideal) -> Result<Vec<VerificationOutcome>> {
    Ok(run_all_on(&Instance::new(base, ideal)?))
}

pub fn run_all_on(inst: &Instance) -> Vec<VerificationOutcome> {
    CHECKERS.iter().map(|(_, c)| c(inst)).collect()
}

fn minimal_primes_are_o1_o2(inst: &Instance) -> bool {
    let mins = &inst.amalgam_minimal_primes;
    let (o1, o2) = (inst.amalgam.o1(), inst.amalgam.o2());
    mins.len() == 2
        && mins.contains(&o1)
        && mins.contains(&o2)
        && mins[0].intersection(&mins[1]).is_zero()
}

pub fn check_p2_1a(inst: &Instance) -> VerificationOutcome {
    let transfer = inst.amalgam_reduced == inst.base_reduced;
    let primes_apply = inst.base_domain && !inst.ideal().is_zero();
    let primes = !primes_apply || minimal_primes_are_o1_o2(inst);
    let detail = format!(
        "R reduced = {}, R⋈I reduced = {}, minimal primes of R⋈I = {}",
        inst.base_reduced,
        inst.amalgam_reduced,
        inst.amalgam_minimal_primes.len()
    );
    inst.outcome(TheoremId::P2_1a, true, transfer && primes, detail).done()
}

pub fn check_p2_1b(inst: &Instance) -> VerificationOutcome {
    let square_zero = inst.ideal().square_is_zero(inst.base());
    let same = inst.amalgam.matches_idealization();
    let detail = format!("I² = 0: {square_zero}, tables equal: {same}");
    inst.outcome(TheoremId::P2_1b, true, square_zero == same, detail).done()
}

pub fn check_p2_2(inst: &Instance) -> VerificationOutcome {
    let zero = inst.ring().zero();
    let class = inst.amalgam.classify_with(&inst.base_zd, &inst.amalgam_zd);
    let union = class.union_nonzero(zero);
    let mut direct = inst.amalgam_zd.clone();
    direct.remove(zero.index());
    let disjoint = class.t3.is_disjoint(&class.t4);
    let detail = format!(
        "|T1|={} |T2|={} |T3|={} |T4|={} |Z(R⋈I)∖0|={}",
        class.t1.len(),
        class.t2.len(),
        class.t3.len(),
        class.t4.len(),
        direct.len()
    );
    inst.outcome(TheoremId::P2_2, true, union == direct && disjoint, detail)
        .witness(|i| {
            let r = i.ring();
            format!(
                "classified {} vs direct {}",
                r.format_set(&union),
                r.format_set(&direct)
            )
        })
}

pub fn check_r2_3(inst: &Instance) -> VerificationOutcome {
    if inst.ideal().len() < 2 {
        return inst.precondition(TheoremId::R2_3, "precondition |I| ≥ 2 not met");
    }
    let r = inst.amalgam.check_remark_2_3_with(&inst.base_zd, &inst.amalgam_zd);
    let detail = format!(
        "(a) {} (b) {} (c) {}",
        r.bipartite_core, r.unit_neighbourhoods, r.base_embedding
    );
    let holds = r.holds();
    let witness = r.witness.clone().unwrap_or_default();
    inst.outcome(TheoremId::R2_3, true, holds, detail).witness(|_| witness)
}

pub fn check_p3_1(inst: &Instance) -> VerificationOutcome {
    if inst.ideal().is_zero() {
        return inst.precondition(TheoremId::P3_1, NONZERO_IDEAL);
    }
    let detail = format!("R domain = {}, girth Γ(R⋈I) = {}", inst.base_domain, inst.amalgam_girth);
    inst.outcome(
        TheoremId::P3_1,
        !inst.base_domain,
        inst.amalgam_girth == Girth::Finite(3),
        detail,
    )
    .done()
}

pub fn check_p3_2(inst: &Instance) -> VerificationOutcome {
    if inst.ideal().is_zero() {
        return inst.precondition(TheoremId::P3_2, NONZERO_IDEAL);
    }
    let size = inst.ideal().len();
    let concl = if size >= 3 {
        inst.amalgam_girth == Girth::Finite(4)
    } else {
        inst.ideal().is_full() && inst.base().order() == 2 && inst.amalgam_girth == Girth::Infinite
    };
    let detail = format!("|I| = {size}, |R| = {}, girth Γ(R⋈I) = {}", inst.base().order(), inst.amalgam_girth);
    inst.outcome(TheoremId::P3_2, inst.base_domain, concl, detail).done()
}

pub fn check_c3_3(inst: &Instance) -> VerificationOutcome {
    if inst.ideal().is_zero() {
        return inst.precondition(TheoremId::C3_3, NONZERO_IDEAL);
    }
    let g = inst.amalgam_girth;
    let domain = inst.base_domain;
    let big = inst.ideal().len() >= 3;
    let z2 = inst.ideal().is_full() && inst.base().order() == 2;
    let a = (g == Girth::Finite(3)) == !domain;
    let b = (g == Girth::Finite(4)) == (domain && big);
    let c = (g == Girth::Infinite) == z2;
    let detail = format!("girth Γ(R⋈I) = {g}, R domain = {domain}, |I| = {}", inst.ideal().len());
    inst.outcome(TheoremId::C3_3, true, a && b && c, detail)
        .witness(|_| format!("clauses (a) {a} (b) {b} (c) {c}; girth {g}"))
}

pub fn check_c3_4(inst: &Instance) -> VerificationOutcome {
    if inst.ideal().is_zero() {
        return inst.precondition(TheoremId::C3_4, NONZERO_IDEAL);
    }
    let a = inst.base_domain;
    let b = matches!(inst.amalgam_girth, Girth::Finite(4) | Girth::Infinite);
    let c = minimal_primes_are_o1_o2(inst);
    let d = inst.amalgam_graph.is_complete_bipartite();
    let detail = format!("(a) domain {a} (b) girth∈{{4,∞}} {b} (c) two minimal primes O1,O2 {c} (d) complete bipartite {d}");
    let agree = a == b && b == c && c == d;
    inst.outcome(TheoremId::C3_4, true, agree, detail).done()
}

pub fn check_l4_5(inst: &Instance) -> VerificationOutcome {
    let lhs = inst.amalgam_zd_square_zero;
    let rhs = inst.base_zd_square_zero && inst.ideal_in_zd;
    let detail = format!("(Z(R⋈I))²=0 {lhs}, (Z(R))²=0 ∧ I⊆Z(R) {rhs}");
    inst.outcome(TheoremId::L4_5, true, lhs == rhs, detail).done()
}

pub fn check_t4_8(inst: &Instance) -> VerificationOutcome {
    if inst.ideal().is_zero() {
        return inst.precondition(TheoremId::T4_8, NONZERO_IDEAL);
    }
    let a = inst.amalgam_graph.is_complete();
    let b = inst.base_zd_square_zero && inst.ideal_in_zd;
    let c = inst.amalgam_zd_square_zero;
    let detail = format!("(a) Γ(R⋈I) complete {a} (b) (Z(R))²=0 ∧ I⊆Z(R) {b} (c) (Z(R⋈I))²=0 {c}");
    inst.outcome(TheoremId::T4_8, true, a == b && b == c, detail)
        .witness(|i| {
            let g = &i.amalgam_graph;
            let mut s = format!("(a) {a} (b) {b} (c) {c}; Γ(R⋈I) has {} vertices, {} edges", g.vertex_count(), g.edge_count());
            let r = i.ring();
            let zd: Vec<usize> = i.amalgam_zd.to_vec();
            if let Some((x, y)) = zd
                .iter()
                .flat_map(|&x| zd.iter().map(move |&y| (x, y)))
                .find(|&(x, y)| r.mul(Elem(x), Elem(y)) != r.zero())
            {
                s.push_str(&format!("; {}·{} ≠ 0", r.labels()[x], r.labels()[y]));
            }
            if let Some(u) = i.ideal().elements().find(|e| !i.base_zd.contains(e.index())) {
                s.push_str(&format!("; {} ∈ I∖Z(R)", i.base().label(u)));
            }
            s
        })
}

pub fn check_l4_9(inst: &Instance) -> VerificationOutcome {
    let hyp = !inst.base_domain && !inst.ideal_in_zd && inst.base_zd_is_ideal;
    let concl = diam_is(inst.amalgam_diameter, 3);
    let detail = format!(
        "R domain {}, I⊆Z(R) {}, Z(R) ideal {}, {}",
        inst.base_domain,
        inst.ideal_in_zd,
        inst.base_zd_is_ideal,
        inst.amalgam_diam_text()
    );
    inst.outcome(TheoremId::L4_9, hyp, concl, detail).done()
}

pub fn check_c4_10(inst: &Instance) -> VerificationOutcome {
    let universal = inst.base_graph.universal_vertex_labels();
    let hyp = !inst.ideal_in_zd && !universal.is_empty();
    let detail = format!(
        "I⊆Z(R) {}, universal vertices of Γ(R) {:?}, {}",
        inst.ideal_in_zd,
        universal,
        inst.amalgam_diam_text()
    );
    inst.outcome(TheoremId::C4_10, hyp, diam_is(inst.amalgam_diameter, 3), detail)
        .done()
}

pub fn check_p4_11(inst: &Instance) -> VerificationOutcome {
    let detail = format!(
        "diam Γ(R) = {}, {}",
        diam_text(inst.base_diameter),
        inst.amalgam_diam_text()
    );
    inst.outcome(
        TheoremId::P4_11,
        diam_is(inst.base_diameter, 3),
        diam_is(inst.amalgam_diameter, 3),
        detail,
    )
    .done()
}

pub fn check_t4_12(inst: &Instance) -> VerificationOutcome {
    if inst.ideal().is_zero() {
        return inst.precondition(TheoremId::T4_12, NONZERO_IDEAL);
    }
    let detail = format!("Z(R) ideal {}, {}", inst.base_zd_is_ideal, inst.amalgam_diam_text());
    inst.outcome(
        TheoremId::T4_12,
        !inst.base_zd_is_ideal,
        diam_is(inst.amalgam_diameter, 3),
        detail,
    )
    .done()
}

/// Every edge `a ~ b` of `Γ(R)` has `Ann(a, b) ≠ 0`.
fn edges_have_common_annihilator(inst: &Instance) -> bool {
    let g = &inst.base_graph;
    let r = inst.base();
    (0..g.vertex_count()).all(|u| {
        g.neighbors(u).filter(|&w| w > u).all(|w| {
            !r.annihilator_pair(g.vertices()[u], g.vertices()[w]).is_zero()
        })
    })
}

fn diameter_two_core(inst: &Instance) -> bool {
    inst.base_zd_is_ideal && inst.ideal_in_zd && diam_is(inst.base_diameter, 2)
}

pub fn check_p4_13(inst: &Instance) -> VerificationOutcome {
    let ann = edges_have_common_annihilator(inst);
    let hyp = diameter_two_core(inst) && ann;
    let detail = format!(
        "Z(R) ideal {}, I⊆Z(R) {}, diam Γ(R) = {}, Ann(a,b)≠0 on edges {ann}, {}",
        inst.base_zd_is_ideal,
        inst.ideal_in_zd,
        diam_text(inst.base_diameter),
        inst.amalgam_diam_text()
    );
    inst.outcome(TheoremId::P4_13, hyp, diam_is(inst.amalgam_diameter, 2), detail)
        .done()
}

pub fn check_c4_14(inst: &Instance) -> VerificationOutcome {
    let hyp = diameter_two_core(inst) && !inst.base_reduced;
    let detail = format!(
        "R reduced {}, Z(R) ideal {}, I⊆Z(R) {}, diam Γ(R) = {}, {}",
        inst.base_reduced,
        inst.base_zd_is_ideal,
        inst.ideal_in_zd,
        diam_text(inst.base_diameter),
        inst.amalgam_diam_text()
    );
    inst.outcome(TheoremId::C4_14, hyp, diam_is(inst.amalgam_diameter, 2), detail)
        .done()
}

pub fn check_l4_15(inst: &Instance) -> VerificationOutcome {
    let hyp = !inst.ideal_in_zd && diam_is(inst.amalgam_diameter, 2);
    let r = inst.base();
    let bad = inst
        .base_zd
        .iter()
        .map(Elem)
        .filter(|&y| y != r.zero())
        .find(|&y| r.annihilator(y).intersection(inst.ideal()).is_zero());
    let detail = format!("I⊆Z(R) {}, {}", inst.ideal_in_zd, inst.amalgam_diam_text());
    inst.outcome(TheoremId::L4_15, hyp, bad.is_none(), detail)
        .witness(|i| format!("Ann({}) ∩ I = {{0}}", i.base().label(bad.unwrap())))
}

pub fn check_p4_16(inst: &Instance) -> VerificationOutcome {
    if inst.amalgam_graph.is_empty() {
        return inst.precondition(TheoremId::P4_16, "precondition Γ(R⋈I) nonempty not met");
    }
    let universal = inst.amalgam_graph.universal_vertex_labels();
    let r = inst.base();
    let prime = inst.base_zd_is_ideal
        && r.is_prime_ideal(&Ideal::new(r, inst.base_zd.clone()).expect("checked ideal"));
    let detail = format!(
        "universal vertices of Γ(R⋈I) {:?}, Z(R) ideal {}, Z(R) prime {prime}",
        universal, inst.base_zd_is_ideal
    );
    inst.outcome(TheoremId::P4_16, !universal.is_empty(), prime, detail)
        .witness(|i| {
            format!(
                "{} universal but Z(R) = {} is not a prime ideal",
                universal[0],
                i.base().format_set(&i.base_zd)
            )
        })
}

/// Structural facts that must hold on every instance regardless of which
/// theorem is being checked. Each returned string names one violation.
pub fn invariant_violations(inst: &Instance) -> Vec<String> {
    let mut out = Vec::new();
    let a = inst.ring();
    let report = a.verify_ring_axioms();
    if !report.is_empty() {
        out.push(format!("ring axioms of R⋈I: {report}"));
    }
    out.extend(
        inst.amalgam
            .product_embedding_violations()
            .into_iter()
            .map(|v| format!("product representation: {v}")),
    );
    for (name, graph, diam, girth) in [
        ("Γ(R)", &inst.base_graph, inst.base_diameter, inst.base_girth),
        ("Γ(R⋈I)", &inst.amalgam_graph, inst.amalgam_diameter, inst.amalgam_girth),
    ] {
        match diam {
            None => out.push(format!("connectivity: {name} is disconnected")),
            Some(Diameter::Finite(d)) if d > 3 => out.push(format!("diameter: diam {name} = {d} > 3")),
            _ => {}
        }
        if !matches!(girth, Girth::Finite(3) | Girth::Finite(4) | Girth::Infinite) {
            out.push(format!("girth: girth {name} = {girth}"));
        }
        let complete = graph.is_complete() && graph.vertex_count() >= 2;
        if complete != (diam == Some(Diameter::Finite(1))) {
            out.push(format!("completeness: {name} complete = {complete} but diam = {}", diam_text(diam)));
        }
    }
    for id in [TheoremId::P2_1a, TheoremId::P2_1b, TheoremId::P2_2, TheoremId::R2_3] {
        let o = checker(id)(inst);
        if o.status == Status::Counterexample {
            out.push(format!("{id}: {}", o.witness.unwrap_or(o.detail)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spec::{parse_ideal, parse_ring};

    fn run(ring: &str, ideal: &str, id: TheoremId) -> VerificationOutcome {
        let r = parse_ring(ring).unwrap();
        let i = parse_ideal(&r, ideal).unwrap();
        check(id, &r, &i).unwrap()
    }

    fn status(ring: &str, ideal: &str, id: TheoremId) -> Status {
        run(ring, ideal, id).status
    }

    #[test]
    fn registry_is_complete_and_ordered() {
        let ids: Vec<TheoremId> = CHECKERS.iter().map(|(t, _)| *t).collect();
        assert_eq!(ids, TheoremId::ALL.to_vec());
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted, ids);
    }

    #[test]
    fn status_soundness() {
        assert_eq!(Status::from_flags(true, true), Status::Verified);
        assert_eq!(Status::from_flags(true, false), Status::Counterexample);
        assert_eq!(Status::from_flags(false, true), Status::Vacuous);
        assert_eq!(Status::from_flags(false, false), Status::Vacuous);
    }

    #[test]
    fn girth_corollaries() {
        use TheoremId::*;
        let o = run("Z6", "gen(3)", C3_3);
        assert_eq!(o.status, Status::Verified);
        assert!(o.detail.contains("girth Γ(R⋈I) = 3"));
        assert!(run("Z3", "full", C3_3).detail.contains("= 4"));
        assert_eq!(status("Z3", "full", C3_3), Status::Verified);
        assert!(run("Z2", "full", C3_3).detail.contains("= inf"));
        assert_eq!(status("Z2", "full", C3_3), Status::Verified);
        assert_eq!(status("Z6", "zero", C3_3), Status::Vacuous);
        assert!(run("Z6", "zero", C3_3).note.is_some());

        for (ring, ideal, all) in [("Z3", "full", true), ("Z6", "gen(3)", false), ("Z2", "full", true)] {
            let o = run(ring, ideal, C3_4);
            assert_eq!(o.status, Status::Verified, "{ring}: {}", o.detail);
            for clause in ["(a) domain", "(b) girth∈{4,∞}", "(c) two minimal primes O1,O2", "(d) complete bipartite"] {
                assert!(o.detail.contains(&format!("{clause} {all}")), "{ring}: {}", o.detail);
            }
        }
        assert_eq!(status("Z6", "gen(3)", P3_1), Status::Verified);
        assert_eq!(status("Z5", "full", P3_2), Status::Verified);
        assert_eq!(status("Z2", "full", P3_2), Status::Verified);
    }

    #[test]
    fn completeness_theorem() {
        use TheoremId::*;
        assert_eq!(status("Z4", "gen(2)", T4_8), Status::Verified);
        let o = run("Z9", "full", T4_8);
        assert_eq!(o.status, Status::Verified);
        assert!(o.detail.contains("complete false") && o.detail.contains("(c) (Z(R⋈I))²=0 false"));
        assert_eq!(status("Z2xZ2", "gen((1,0))", T4_8), Status::Verified);
        assert_eq!(status("Z2xZ2", "gen((1,0))", L4_5), Status::Verified);
    }

    #[test]
    fn completeness_theorem_fails_on_z2_duplicated() {
        // Z2⋈Z2 ≅ Z2×Z2, whose graph is a single edge (complete), while I ⊄ Z(Z2).
        let o = run("Z2", "full", TheoremId::T4_8);
        assert_eq!(o.status, Status::Counterexample);
        assert!(o.witness.as_deref().unwrap().contains("1 ∈ I∖Z(R)"));
        assert_eq!(status("Z2", "full", TheoremId::L4_5), Status::Verified);
    }

    #[test]
    fn diameter_results() {
        use TheoremId::*;
        let o = run("Z4", "full", L4_9);
        assert!(o.hypotheses_hold);
        assert_eq!(o.status, Status::Verified);
        assert_eq!(status("Z6", "gen(3)", L4_9), Status::Vacuous);
        assert_eq!(status("Z5", "full", L4_9), Status::Vacuous);

        assert_eq!(status("Z2xZ3", "full", C4_10), Status::Verified);
        let o = run("Z2xZ2", "full", C4_10);
        assert_eq!(o.status, Status::Verified);
        assert!(o.detail.contains("diam Γ(R⋈I) = 3"));
        assert_eq!(status("Z8", "gen(4)", C4_10), Status::Vacuous);

        for ideal in ["zero", "gen((1,0))", "gen((0,2))", "full"] {
            let o = run("Z2xZ4", ideal, P4_11);
            assert!(o.hypotheses_hold, "{ideal}");
            assert_eq!(o.status, Status::Verified, "{ideal}");
        }
        assert_eq!(status("Z6", "gen(3)", P4_11), Status::Vacuous);
        assert_eq!(status("Z4", "gen(2)", P4_11), Status::Vacuous);

        let o = run("Z6", "gen(3)", T4_12);
        assert_eq!(o.status, Status::Verified);
        assert!(o.detail.contains("diam Γ(R⋈I) = 3"));
        assert_eq!(status("Z2xZ2", "gen((1,0))", T4_12), Status::Verified);
        assert_eq!(status("Z8", "gen(4)", T4_12), Status::Vacuous);

        let o = run("Z8", "gen(4)", P4_13);
        assert!(o.hypotheses_hold);
        assert_eq!(o.status, Status::Verified);
        assert_eq!(status("Z8", "gen(4)", C4_14), Status::Verified);
        assert_eq!(status("Z6", "gen(3)", P4_13), Status::Vacuous);
        assert_eq!(status("Z4", "gen(2)", P4_13), Status::Vacuous);

        assert_eq!(status("Z8", "gen(4)", L4_15), Status::Vacuous);
        assert_ne!(status("Z4", "full", L4_15), Status::Counterexample);
        assert_ne!(status("Z3", "full", L4_15), Status::Counterexample);
    }

    #[test]
    fn universal_vertex_result() {
        use TheoremId::*;
        let o = run("Z4", "gen(2)", P4_16);
        assert!(o.hypotheses_hold);
        assert_eq!(o.status, Status::Verified);
        assert_ne!(status("Z6", "gen(3)", P4_16), Status::Counterexample);
        let o = run("Z2", "full", P4_16);
        assert!(o.hypotheses_hold);
        assert_eq!(o.status, Status::Verified);
        assert!(run("Z5", "zero", P4_16).note.is_some());
    }

    #[test]
    fn run_all_shapes() {
        let r = parse_ring("Z6").unwrap();
        let i = parse_ideal(&r, "gen(3)").unwrap();
        let outcomes = run_all(&r, &i).unwrap();
        assert_eq!(outcomes.len(), TheoremId::ALL.len());
        assert!(outcomes.iter().all(|o| o.status != Status::Counterexample));
        for o in &outcomes {
            assert_eq!(o.status == Status::Counterexample, o.hypotheses_hold && !o.conclusion_holds);
            assert_eq!(o.status == Status::Vacuous, !o.hypotheses_hold);
            assert_eq!(o.ideal_members, vec!["0", "3"]);
        }
        let inst = Instance::new(&r, &i).unwrap();
        assert!(invariant_violations(&inst).is_empty());
    }

    #[test]
    fn duplication_structure_checks() {
        use TheoremId::*;
        for (ring, ideal) in [("Z8", "gen(4)"), ("Z3", "full"), ("Z4", "gen(2)"), ("Z6", "zero"), ("Z2xZ2", "gen((1,0))")] {
            for id in [P2_1a, P2_1b, P2_2] {
                assert_eq!(status(ring, ideal, id), Status::Verified, "{id} {ring} {ideal}");
            }
        }
        assert_eq!(status("Z6", "zero", R2_3), Status::Vacuous);
        assert_eq!(status("Z6", "gen(3)", R2_3), Status::Verified);
    }
}
