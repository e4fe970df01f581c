//! The amalgamated duplication `R⋈I` in its `R ⊕ I` pair form, plus the
//! idealization `R(+)I` on the same carrier.
//!
//! Elements are pairs `(r, i)` with `r ∈ R`, `i ∈ I`, added componentwise and
//! multiplied by `(r,i)(s,j) = (rs, rj + si + ij)`. The carrier index of
//! `(r, i)` is `r * |I| + k` where `i` is the `k`-th member of `I`.

use crate::error::{Error, Result};
use crate::ring::{Elem, FiniteRing, Ideal};
use crate::set::ElemSet;

#[derive(Clone, Debug)]
pub struct AmalgamRing {
    base: FiniteRing,
    ideal: Ideal,
    ideal_elems: Vec<usize>,
    ideal_pos: Vec<Option<usize>>,
    ring: FiniteRing,
}

/// The four zero-divisor families of `R⋈I`, as membership sets over its carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZdClassification {
    /// `{(0,i)} ∩ Z(R⋈I)`
    pub t1: ElemSet,
    /// `{(i,-i)} ∩ Z(R⋈I)`
    pub t2: ElemSet,
    /// `{(x,i) : x ∈ Z(R) \ {0}}`
    pub t3: ElemSet,
    /// `{(x,i) : x ∉ Z(R), j(x+i) = 0 for some nonzero j ∈ I}`
    pub t4: ElemSet,
}

impl ZdClassification {
    /// `T1 ∪ T2 ∪ T3 ∪ T4` without the zero element.
    pub fn union_nonzero(&self, zero: Elem) -> ElemSet {
        let mut u = self.t1.union(&self.t2).union(&self.t3).union(&self.t4);
        u.remove(zero.index());
        u
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Remark23Report {
    /// `T1 \ {0}` and `T2 \ {0}` are completely joined.
    pub bipartite_core: bool,
    /// For `i ∈ I \ Z(R)`, `(0,i)` only sees `T2 \ {0}` and `(i,-i)` only sees `T1 \ {0}`.
    pub unit_neighbourhoods: bool,
    /// `x ↦ (x,0)` embeds `Γ(R)` as an induced subgraph.
    pub base_embedding: bool,
    /// `|I| < 2`: nothing to check.
    pub vacuous: bool,
    pub witness: Option<String>,
}

impl Remark23Report {
    pub fn holds(&self) -> bool {
        self.bipartite_core && self.unit_neighbourhoods && self.base_embedding
    }
}

impl AmalgamRing {
    /// Builds `R⋈I`. Fails if `ideal` is not an ideal of `base`.
    pub fn amalgamated_duplication(base: &FiniteRing, ideal: &Ideal) -> Result<Self> {
        Self::build(base, ideal, true)
    }

    fn build(base: &FiniteRing, ideal: &Ideal, amalgamated: bool) -> Result<Self> {
        if let Some(why) = base.ideal_violation(ideal.members()) {
            return Err(Error::NotAnIdeal(format!(
                "{} in {}: {why}",
                base.format_set(ideal.members()),
                base.spec_name()
            )));
        }
        let ideal_elems = ideal.members().to_vec();
        let mut ideal_pos = vec![None; base.order()];
        for (k, &i) in ideal_elems.iter().enumerate() {
            ideal_pos[i] = Some(k);
        }
        let k = ideal_elems.len();
        let n = base.order() * k;
        let pairs: Vec<(usize, usize)> = (0..base.order())
            .flat_map(|r| ideal_elems.iter().map(move |&i| (r, i)))
            .collect();
        let index = |r: usize, i: usize| r * k + ideal_pos[i].expect("closed under ideal ops");

        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for &(r, i) in &pairs {
            for &(s, j) in &pairs {
                add.push(index(base.a(r, s), base.a(i, j)));
                let cross = base.a(base.m(r, j), base.m(s, i));
                let second = if amalgamated {
                    base.a(cross, base.m(i, j))
                } else {
                    cross
                };
                mul.push(index(base.m(r, s), second));
            }
        }
        let labels = pairs
            .iter()
            .map(|&(r, i)| format!("({},{})", base.labels()[r], base.labels()[i]))
            .collect();
        let suffix = if amalgamated { "⋈" } else { "(+)" };
        let name = format!("{}{}{}", base.spec_name(), suffix, base.format_set(ideal.members()));
        let zero = index(base.zero().index(), base.zero().index());
        let one = index(base.one().index(), base.zero().index());
        let ring = FiniteRing::from_tables_unchecked(name, labels, add, mul, zero, one)?;
        Ok(AmalgamRing {
            base: base.clone(),
            ideal: ideal.clone(),
            ideal_elems,
            ideal_pos,
            ring,
        })
    }

    pub fn base(&self) -> &FiniteRing {
        &self.base
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    /// The element `(r, i)`, if `i ∈ I`.
    pub fn element(&self, r: Elem, i: Elem) -> Option<Elem> {
        self.ideal_pos[i.index()].map(|k| Elem(r.index() * self.ideal_elems.len() + k))
    }

    /// Looks up `(r, i)` by base-ring labels.
    pub fn element_by_labels(&self, r: &str, i: &str) -> Option<Elem> {
        self.element(self.base.find_label(r)?, self.base.find_label(i)?)
    }

    pub fn pair_of(&self, e: Elem) -> (Elem, Elem) {
        let k = self.ideal_elems.len();
        (Elem(e.index() / k), Elem(self.ideal_elems[e.index() % k]))
    }

    /// `f((r,i)) = (r, r+i)` in `R × R`.
    pub fn to_product_rep(&self, e: Elem) -> (Elem, Elem) {
        let (r, i) = self.pair_of(e);
        (r, self.base.add(r, i))
    }

    /// Checks that `f` is an injective ring homomorphism onto `{(a,b) : b-a ∈ I}`.
    /// Returns a description of every failed property.
    pub fn product_embedding_violations(&self) -> Vec<String> {
        let b = &self.base;
        let mut out = Vec::new();
        let images: Vec<(Elem, Elem)> = self.ring.elements().map(|e| self.to_product_rep(e)).collect();
        let mut hit = vec![false; b.order() * b.order()];
        for (e, &(x, y)) in images.iter().enumerate() {
            let slot = &mut hit[x.index() * b.order() + y.index()];
            if *slot {
                out.push(format!("f not injective at {}", self.ring.labels()[e]));
            }
            *slot = true;
            if !self.ideal.contains(b.sub(y, x)) {
                out.push(format!("f({}) outside R⋈I", self.ring.labels()[e]));
            }
        }
        let image_count = (0..b.order())
            .flat_map(|x| (0..b.order()).map(move |y| (x, y)))
            .filter(|&(x, y)| self.ideal.contains(b.sub(Elem(y), Elem(x))))
            .count();
        if image_count != images.len() {
            out.push("image of f is not all of {(a,b) : b-a in I}".into());
        }
        if images[self.ring.one().index()] != (b.one(), b.one()) {
            out.push("f(1) != (1,1)".into());
        }
        'outer: for x in self.ring.elements() {
            for y in self.ring.elements() {
                let (a1, a2) = images[x.index()];
                let (c1, c2) = images[y.index()];
                let sum = images[self.ring.add(x, y).index()];
                let prod = images[self.ring.mul(x, y).index()];
                if sum != (b.add(a1, c1), b.add(a2, c2)) {
                    out.push(format!("f not additive at {}, {}", self.ring.label(x), self.ring.label(y)));
                    break 'outer;
                }
                if prod != (b.mul(a1, c1), b.mul(a2, c2)) {
                    out.push(format!("f not multiplicative at {}, {}", self.ring.label(x), self.ring.label(y)));
                    break 'outer;
                }
            }
        }
        out
    }

    /// `O1 = {(0,i) : i ∈ I}`.
    pub fn o1(&self) -> Ideal {
        let z = self.base.zero();
        let set = ElemSet::from_indices(
            self.ring.order(),
            self.ideal.elements().map(|i| self.element(z, i).unwrap().index()),
        );
        Ideal::new(&self.ring, set).expect("O1 is an ideal")
    }

    /// `O2 = {(-i,i) : i ∈ I}`.
    pub fn o2(&self) -> Ideal {
        let set = ElemSet::from_indices(
            self.ring.order(),
            self.ideal
                .elements()
                .map(|i| self.element(self.base.neg(i), i).unwrap().index()),
        );
        Ideal::new(&self.ring, set).expect("O2 is an ideal")
    }

    /// The idealization `R(+)I` on the same carrier and labels.
    pub fn idealization(base: &FiniteRing, ideal: &Ideal) -> Result<FiniteRing> {
        Ok(Self::build(base, ideal, false)?.ring)
    }

    /// True iff the multiplication tables of `R⋈I` and `R(+)I` coincide under
    /// the identity carrier map.
    pub fn matches_idealization(&self) -> bool {
        let ideal_ring = Self::build(&self.base, &self.ideal, false).expect("already validated");
        ideal_ring.ring.mul_table() == self.ring.mul_table()
    }

    /// Computes the T1..T4 families against the given base and amalgam zero-divisor sets.
    pub fn classify_with(&self, base_zd: &ElemSet, amalgam_zd: &ElemSet) -> ZdClassification {
        let b = &self.base;
        let n = self.ring.order();
        let zero = b.zero();
        let mut t1 = ElemSet::empty(n);
        let mut t2 = ElemSet::empty(n);
        let mut t3 = ElemSet::empty(n);
        let mut t4 = ElemSet::empty(n);
        for i in self.ideal.elements() {
            t1.insert(self.element(zero, i).unwrap().index());
            t2.insert(self.element(i, b.neg(i)).expect("-i lies in I").index());
        }
        let t1 = t1.intersection(amalgam_zd);
        let t2 = t2.intersection(amalgam_zd);
        for e in self.ring.elements() {
            let (x, i) = self.pair_of(e);
            if base_zd.contains(x.index()) {
                if x != zero {
                    t3.insert(e.index());
                }
            } else {
                let xi = b.add(x, i);
                if self.ideal.elements().any(|j| j != zero && b.mul(j, xi) == zero) {
                    t4.insert(e.index());
                }
            }
        }
        ZdClassification { t1, t2, t3, t4 }
    }

    pub fn classify_zero_divisors(&self) -> ZdClassification {
        self.classify_with(&self.base.zero_divisors(), &self.ring.zero_divisors())
    }

    pub fn check_remark_2_3(&self) -> Remark23Report {
        self.check_remark_2_3_with(&self.base.zero_divisors(), &self.ring.zero_divisors())
    }

    pub fn check_remark_2_3_with(&self, base_zd: &ElemSet, amalgam_zd: &ElemSet) -> Remark23Report {
        let mut report = Remark23Report {
            bipartite_core: true,
            unit_neighbourhoods: true,
            base_embedding: true,
            vacuous: self.ideal.len() < 2,
            witness: None,
        };
        if report.vacuous {
            return report;
        }
        let a = &self.ring;
        let b = &self.base;
        let zero = a.zero();
        let class = self.classify_with(base_zd, amalgam_zd);
        let mut t1 = class.t1.clone();
        t1.remove(zero.index());
        let mut t2 = class.t2.clone();
        t2.remove(zero.index());
        let mut vertices = amalgam_zd.clone();
        vertices.remove(zero.index());
        let adjacent = |x: usize, y: usize| x != y && a.m(x, y) == zero.index();
        let mut witness = Vec::new();

        'a: for x in t1.iter() {
            for y in t2.iter() {
                if !adjacent(x, y) {
                    report.bipartite_core = false;
                    witness.push(format!("{} not adjacent to {}", a.labels()[x], a.labels()[y]));
                    break 'a;
                }
            }
        }

        for i in self.ideal.elements().filter(|i| !base_zd.contains(i.index())) {
            let left = self.element(b.zero(), i).unwrap().index();
            let right = self.element(i, b.neg(i)).unwrap().index();
            for (v, allowed) in [(left, &t2), (right, &t1)] {
                if let Some(w) = vertices.iter().find(|&w| adjacent(v, w) && !allowed.contains(w)) {
                    report.unit_neighbourhoods = false;
                    witness.push(format!("{} adjacent to {}", a.labels()[v], a.labels()[w]));
                }
            }
        }

        let base_vertices: Vec<Elem> = base_zd.iter().map(Elem).filter(|&x| x != b.zero()).collect();
        'c: for &x in &base_vertices {
            let ex = self.element(x, b.zero()).unwrap().index();
            if !vertices.contains(ex) {
                report.base_embedding = false;
                witness.push(format!("{} is not a vertex", a.labels()[ex]));
                break;
            }
            for &y in &base_vertices {
                let ey = self.element(y, b.zero()).unwrap().index();
                let in_base = x != y && b.mul(x, y) == b.zero();
                if in_base != adjacent(ex, ey) {
                    report.base_embedding = false;
                    witness.push(format!("adjacency of {}, {} not preserved", b.label(x), b.label(y)));
                    break 'c;
                }
            }
        }
        if !witness.is_empty() {
            report.witness = Some(witness.join("; "));
        }
        report
    }
}
