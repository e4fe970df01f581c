//! Finite commutative rings with identity, stored as explicit Cayley tables.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::set::ElemSet;

/// An element of a [`FiniteRing`], identified by its carrier index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem(pub usize);

impl Elem {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

/// A finite commutative ring with nonzero identity.
#[derive(Clone, Debug)]
pub struct FiniteRing {
    order: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    neg: Vec<usize>,
    zero: usize,
    one: usize,
    labels: Vec<String>,
    spec_name: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axiom {
    AddIdentity,
    AddCommutative,
    AddAssociative,
    AddInverse,
    AddRowPermutation,
    MulIdentity,
    MulCommutative,
    MulAssociative,
    Distributive,
    NonzeroUnity,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::AddIdentity => "additive identity",
            Axiom::AddCommutative => "additive commutativity",
            Axiom::AddAssociative => "additive associativity",
            Axiom::AddInverse => "additive inverses",
            Axiom::AddRowPermutation => "addition rows are permutations",
            Axiom::MulIdentity => "multiplicative identity",
            Axiom::MulCommutative => "multiplicative commutativity",
            Axiom::MulAssociative => "multiplicative associativity",
            Axiom::Distributive => "distributivity",
            Axiom::NonzeroUnity => "nonzero unity",
        };
        f.write_str(s)
    }
}

/// One violated axiom together with the first witness found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    pub witness: String,
}

/// Violated axioms; empty iff the tables describe a valid ring.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub violations: Vec<AxiomViolation>,
}

impl AxiomReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violates(&self, axiom: Axiom) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }

    fn push(&mut self, axiom: Axiom, witness: String) {
        self.violations.push(AxiomViolation { axiom, witness });
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.violations.iter().enumerate() {
            if k > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{} ({})", v.axiom, v.witness)?;
        }
        Ok(())
    }
}

impl FiniteRing {
    /// Builds a ring from tables and runs the full axiom scan.
    pub fn from_tables(
        spec_name: impl Into<String>,
        labels: Vec<String>,
        add: Vec<usize>,
        mul: Vec<usize>,
        zero: usize,
        one: usize,
    ) -> Result<Self> {
        let ring = Self::from_tables_unchecked(spec_name, labels, add, mul, zero, one)?;
        if ring.order == 1 {
            return Err(Error::ZeroRing(1));
        }
        let report = ring.verify_ring_axioms();
        if !report.is_empty() {
            return Err(Error::Axioms(report));
        }
        Ok(ring)
    }

    /// Builds a ring from tables, checking only their shape. The result may
    /// violate the ring axioms; see [`FiniteRing::verify_ring_axioms`].
    pub fn from_tables_unchecked(
        spec_name: impl Into<String>,
        labels: Vec<String>,
        add: Vec<usize>,
        mul: Vec<usize>,
        zero: usize,
        one: usize,
    ) -> Result<Self> {
        let order = labels.len();
        if order == 0 {
            return Err(Error::ZeroRing(0));
        }
        if add.len() != order * order || mul.len() != order * order {
            return Err(Error::TableShape(format!(
                "expected {order}x{order} tables, got {} and {} entries",
                add.len(),
                mul.len()
            )));
        }
        if let Some(bad) = add.iter().chain(mul.iter()).find(|&&v| v >= order) {
            return Err(Error::TableShape(format!("entry {bad} out of range 0..{order}")));
        }
        if zero >= order || one >= order {
            return Err(Error::TableShape("zero or one out of range".into()));
        }
        let neg = (0..order)
            .map(|x| {
                (0..order)
                    .find(|&y| add[x * order + y] == zero)
                    .unwrap_or(zero)
            })
            .collect();
        Ok(FiniteRing {
            order,
            add,
            mul,
            neg,
            zero,
            one,
            labels,
            spec_name: spec_name.into(),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn spec_name(&self) -> &str {
        &self.spec_name
    }

    pub fn zero(&self) -> Elem {
        Elem(self.zero)
    }

    pub fn one(&self) -> Elem {
        Elem(self.one)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, e: Elem) -> &str {
        &self.labels[e.0]
    }

    pub fn find_label(&self, label: &str) -> Option<Elem> {
        self.labels.iter().position(|l| l == label).map(Elem)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.order).map(Elem)
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.a(a.0, b.0))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.m(a.0, b.0))
    }

    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.neg[a.0])
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.a(a.0, self.neg[b.0]))
    }

    #[inline]
    pub(crate) fn a(&self, x: usize, y: usize) -> usize {
        self.add[x * self.order + y]
    }

    #[inline]
    pub(crate) fn m(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.order + y]
    }

    fn row(t: &[usize], n: usize, x: usize) -> &[usize] {
        &t[x * n..(x + 1) * n]
    }

    pub(crate) fn mul_table(&self) -> &[usize] {
        &self.mul
    }

    #[cfg(test)]
    pub(crate) fn add_table(&self) -> &[usize] {
        &self.add
    }

    /// Human-readable rendering of a membership set, e.g. `{0,3}`.
    pub fn format_set(&self, set: &ElemSet) -> String {
        let parts: Vec<&str> = set.iter().map(|i| self.labels[i].as_str()).collect();
        format!("{{{}}}", parts.join(","))
    }

    pub fn set_labels(&self, set: &ElemSet) -> Vec<String> {
        set.iter().map(|i| self.labels[i].clone()).collect()
    }

    /// Exhaustive scan of every ring axiom. Reports the first witness per axiom.
    pub fn verify_ring_axioms(&self) -> AxiomReport {
        let n = self.order;
        let l = &self.labels;
        let mut report = AxiomReport::default();

        if self.zero == self.one {
            report.push(Axiom::NonzeroUnity, format!("zero = one = {}", l[self.zero]));
        }
        if let Some(x) = (0..n).find(|&x| self.a(self.zero, x) != x) {
            report.push(Axiom::AddIdentity, format!("0+{} != {}", l[x], l[x]));
        }
        if let Some(x) = (0..n).find(|&x| self.m(self.one, x) != x) {
            report.push(Axiom::MulIdentity, format!("1*{} != {}", l[x], l[x]));
        }
        let pairs = || (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)));
        if let Some((x, y)) = pairs().find(|&(x, y)| self.a(x, y) != self.a(y, x)) {
            report.push(Axiom::AddCommutative, format!("{}+{}", l[x], l[y]));
        }
        if let Some((x, y)) = pairs().find(|&(x, y)| self.m(x, y) != self.m(y, x)) {
            report.push(Axiom::MulCommutative, format!("{}*{}", l[x], l[y]));
        }
        let mut seen = vec![false; n];
        'rows: for x in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for y in 0..n {
                let v = self.a(x, y);
                if seen[v] {
                    report.push(Axiom::AddRowPermutation, format!("row {}", l[x]));
                    break 'rows;
                }
                seen[v] = true;
            }
        }
        if let Some(x) = (0..n).find(|&x| !(0..n).any(|y| self.a(x, y) == self.zero)) {
            report.push(Axiom::AddInverse, format!("-{} missing", l[x]));
        }

        // Row slices keep the cubic checks cheap on orders in the hundreds.
        let (add, mul) = (&self.add[..], &self.mul[..]);
        let mut add_assoc = None;
        let mut mul_assoc = None;
        let mut distrib = None;
        for x in 0..n {
            let (ax, mx) = (Self::row(add, n, x), Self::row(mul, n, x));
            for y in 0..n {
                let (ay, my) = (Self::row(add, n, y), Self::row(mul, n, y));
                let (axy, mxy) = (Self::row(add, n, ax[y]), Self::row(mul, n, mx[y]));
                for z in 0..n {
                    if add_assoc.is_none() && axy[z] != ax[ay[z]] {
                        add_assoc = Some((x, y, z));
                    }
                    if mul_assoc.is_none() && mxy[z] != mx[my[z]] {
                        mul_assoc = Some((x, y, z));
                    }
                    if distrib.is_none() && mx[ay[z]] != add[mx[y] * n + mx[z]] {
                        distrib = Some((x, y, z));
                    }
                }
            }
        }
        if let Some((x, y, z)) = add_assoc {
            report.push(Axiom::AddAssociative, format!("({}+{})+{}", l[x], l[y], l[z]));
        }
        if let Some((x, y, z)) = mul_assoc {
            report.push(Axiom::MulAssociative, format!("({}*{})*{}", l[x], l[y], l[z]));
        }
        if let Some((x, y, z)) = distrib {
            report.push(Axiom::Distributive, format!("{}*({}+{})", l[x], l[y], l[z]));
        }
        report
    }

    /// `Z(R)`: all `x` with `xy = 0` for some `y != 0`. Always contains 0.
    pub fn zero_divisors(&self) -> ElemSet {
        let n = self.order;
        ElemSet::from_indices(
            n,
            (0..n).filter(|&x| (0..n).any(|y| y != self.zero && self.m(x, y) == self.zero)),
        )
    }

    pub fn annihilator(&self, a: Elem) -> Ideal {
        let n = self.order;
        Ideal {
            members: ElemSet::from_indices(n, (0..n).filter(|&r| self.m(r, a.0) == self.zero)),
        }
    }

    /// `Ann(a, b) = Ann(a) ∩ Ann(b)`.
    pub fn annihilator_pair(&self, a: Elem, b: Elem) -> Ideal {
        let n = self.order;
        Ideal {
            members: ElemSet::from_indices(
                n,
                (0..n).filter(|&r| self.m(r, a.0) == self.zero && self.m(r, b.0) == self.zero),
            ),
        }
    }

    pub fn principal_ideal(&self, a: Elem) -> Ideal {
        let n = self.order;
        Ideal {
            members: ElemSet::from_indices(n, (0..n).map(|r| self.m(r, a.0))),
        }
    }

    /// Smallest ideal containing every generator.
    pub fn ideal_generated(&self, gens: &[Elem]) -> Ideal {
        gens.iter()
            .map(|&g| self.principal_ideal(g))
            .fold(Ideal::zero(self), |acc, p| acc.sum(self, &p))
    }

    /// Every ideal exactly once: principal ideals closed under pairwise sums,
    /// ordered by size and then member indices.
    pub fn all_ideals(&self) -> Vec<Ideal> {
        let mut known: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut found: Vec<Ideal> = Vec::new();
        let mut queue: VecDeque<usize> = VecDeque::new();
        for a in self.elements() {
            let p = self.principal_ideal(a);
            if known.insert(p.members.to_vec()) {
                queue.push_back(found.len());
                found.push(p);
            }
        }
        while let Some(k) = queue.pop_front() {
            let mut fresh = Vec::new();
            for other in &found {
                let s = found[k].sum(self, other);
                if known.insert(s.members.to_vec()) {
                    fresh.push(s);
                }
            }
            for s in fresh {
                queue.push_back(found.len());
                found.push(s);
            }
        }
        sort_ideals(&mut found);
        found
    }

    /// Returns why `set` fails to be an ideal, or `None` if it is one.
    pub fn ideal_violation(&self, set: &ElemSet) -> Option<String> {
        let l = &self.labels;
        if set.universe() != self.order {
            return Some(format!(
                "set over {} elements, ring has {}",
                set.universe(),
                self.order
            ));
        }
        if !set.contains(self.zero) {
            return Some("does not contain 0".into());
        }
        let members = set.to_vec();
        for &x in &members {
            for &y in &members {
                let s = self.a(x, y);
                if !set.contains(s) {
                    return Some(format!("{}+{} = {} not in set", l[x], l[y], l[s]));
                }
            }
        }
        for &x in &members {
            for r in 0..self.order {
                let p = self.m(r, x);
                if !set.contains(p) {
                    return Some(format!("{}*{} = {} not in set", l[r], l[x], l[p]));
                }
            }
        }
        None
    }

    pub fn is_ideal(&self, set: &ElemSet) -> bool {
        self.ideal_violation(set).is_none()
    }

    /// True iff `xy = 0` for all `x, y` in the set (squares included).
    pub fn set_square_zero(&self, set: &ElemSet) -> bool {
        let members = set.to_vec();
        members
            .iter()
            .all(|&x| members.iter().all(|&y| self.m(x, y) == self.zero))
    }

    /// `(Z(R))^2 = 0`.
    pub fn zset_square_zero(&self) -> bool {
        self.set_square_zero(&self.zero_divisors())
    }

    pub fn is_domain(&self) -> bool {
        self.zero_divisors().len() == 1
    }

    pub fn is_nilpotent(&self, a: Elem) -> bool {
        let mut p = a.0;
        for _ in 0..self.order {
            if p == self.zero {
                return true;
            }
            p = self.m(p, a.0);
        }
        p == self.zero
    }

    pub fn is_reduced(&self) -> bool {
        self.elements()
            .filter(|&x| x.0 != self.zero)
            .all(|x| !self.is_nilpotent(x))
    }

    pub fn is_field(&self) -> bool {
        (0..self.order)
            .filter(|&x| x != self.zero)
            .all(|x| (0..self.order).any(|y| self.m(x, y) == self.one))
    }

    /// Proper ideal whose complement is multiplicatively closed.
    pub fn is_prime_ideal(&self, ideal: &Ideal) -> bool {
        if ideal.members.contains(self.one) {
            return false;
        }
        let outside: Vec<usize> = ideal.members.complement().to_vec();
        outside
            .iter()
            .all(|&a| outside.iter().all(|&b| !ideal.members.contains(self.m(a, b))))
    }

    pub fn prime_ideals(&self) -> Vec<Ideal> {
        self.all_ideals()
            .into_iter()
            .filter(|p| self.is_prime_ideal(p))
            .collect()
    }

    pub fn minimal_primes(&self) -> Vec<Ideal> {
        let primes = self.prime_ideals();
        primes
            .iter()
            .filter(|p| {
                !primes
                    .iter()
                    .any(|q| q != *p && q.members.is_subset(&p.members))
            })
            .cloned()
            .collect()
    }
}

pub(crate) fn sort_ideals(ideals: &mut [Ideal]) {
    ideals.sort_by_cached_key(|i| (i.len(), i.members.to_vec()));
}

/// An ideal of a [`FiniteRing`], stored as a dense membership set over the
/// ring's carrier. Always validated against the ring it was built from.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ideal {
    members: ElemSet,
}

impl Ideal {
    pub fn new(ring: &FiniteRing, members: ElemSet) -> Result<Self> {
        match ring.ideal_violation(&members) {
            Some(why) => Err(Error::NotAnIdeal(format!("{} in {}: {why}", ring.format_set(&members), ring.spec_name()))),
            None => Ok(Ideal { members }),
        }
    }

    pub fn zero(ring: &FiniteRing) -> Self {
        Ideal {
            members: ElemSet::from_indices(ring.order, [ring.zero]),
        }
    }

    pub fn full(ring: &FiniteRing) -> Self {
        Ideal {
            members: ElemSet::full(ring.order),
        }
    }

    pub fn members(&self) -> &ElemSet {
        &self.members
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        self.members.iter().map(Elem)
    }

    pub fn contains(&self, e: Elem) -> bool {
        self.members.contains(e.0)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_full(&self) -> bool {
        self.members.len() == self.members.universe()
    }

    pub fn sum(&self, ring: &FiniteRing, other: &Ideal) -> Ideal {
        let mut members = ElemSet::empty(ring.order);
        for x in self.members.iter() {
            for y in other.members.iter() {
                members.insert(ring.a(x, y));
            }
        }
        Ideal { members }
    }

    pub fn intersection(&self, other: &Ideal) -> Ideal {
        Ideal {
            members: self.members.intersection(&other.members),
        }
    }

    /// True iff every product of two members is zero.
    pub fn square_is_zero(&self, ring: &FiniteRing) -> bool {
        ring.set_square_zero(&self.members)
    }

    pub fn labels(&self, ring: &FiniteRing) -> Vec<String> {
        ring.set_labels(&self.members)
    }
}

/// `Z_n` with arithmetic mod `n`.
pub fn make_zn(n: usize) -> Result<FiniteRing> {
    if n < 2 {
        return Err(Error::ZeroRing(n));
    }
    let add = (0..n * n).map(|k| (k / n + k % n) % n).collect();
    let mul = (0..n * n).map(|k| (k / n) * (k % n) % n).collect();
    let labels = (0..n).map(|k| k.to_string()).collect();
    FiniteRing::from_tables_unchecked(format!("Z{n}"), labels, add, mul, 0, 1)
}

/// `R × S` with componentwise operations and labels `(a,b)`.
pub fn direct_product(r: &FiniteRing, s: &FiniteRing) -> FiniteRing {
    direct_product_all(&[r, s])
}

/// Product of several rings with flattened labels `(a,b,c)`.
pub fn direct_product_all(factors: &[&FiniteRing]) -> FiniteRing {
    assert!(!factors.is_empty(), "empty product");
    if factors.len() == 1 {
        return factors[0].clone();
    }
    let order: usize = factors.iter().map(|f| f.order).product();
    let decompose = |mut k: usize| -> Vec<usize> {
        let mut digits = vec![0; factors.len()];
        for (slot, f) in digits.iter_mut().zip(factors.iter()).rev() {
            *slot = k % f.order;
            k /= f.order;
        }
        digits
    };
    let compose = |digits: &[usize]| -> usize {
        digits
            .iter()
            .zip(factors.iter())
            .fold(0, |acc, (&d, f)| acc * f.order + d)
    };
    let coords: Vec<Vec<usize>> = (0..order).map(decompose).collect();
    let mut add = Vec::with_capacity(order * order);
    let mut mul = Vec::with_capacity(order * order);
    let mut buf = vec![0; factors.len()];
    for x in &coords {
        for y in &coords {
            for (k, f) in factors.iter().enumerate() {
                buf[k] = f.a(x[k], y[k]);
            }
            add.push(compose(&buf));
            for (k, f) in factors.iter().enumerate() {
                buf[k] = f.m(x[k], y[k]);
            }
            mul.push(compose(&buf));
        }
    }
    let labels = coords
        .iter()
        .map(|c| {
            let parts: Vec<&str> = c
                .iter()
                .zip(factors.iter())
                .map(|(&d, f)| f.labels[d].as_str())
                .collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let zero = compose(&factors.iter().map(|f| f.zero).collect::<Vec<_>>());
    let one = compose(&factors.iter().map(|f| f.one).collect::<Vec<_>>());
    let name = factors
        .iter()
        .map(|f| f.spec_name.as_str())
        .collect::<Vec<_>>()
        .join("x");
    FiniteRing::from_tables_unchecked(name, labels, add, mul, zero, one)
        .expect("product tables are well formed")
}
