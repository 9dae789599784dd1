//! Density thresholds for lifts, the F(t) embedding finder, exact extremal
//! numbers on few vertices and deletion-method lower bounds.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::analysis::{Assumption, BoundCertificate, Check, Source, Theorem};
use crate::catalog::{self, Property};
use crate::embed;
use crate::exact;
use crate::hom::{self, HomConfig};
use crate::hypergraph::{for_each_subset, Hypergraph, PartiteHypergraph, Vertex};
use crate::{Error, Rational, Result};

fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}

fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// The edge count e(H) ≥ (1/r!)·(t + 2v(F))^{1/s}·n^{r − 1/s} that forces a
/// copy of F(t) in an r-graph H on n vertices, with s = p/q.
#[derive(Clone, Debug, PartialEq)]
pub struct KstThreshold {
    pub n: usize,
    pub uniformity: usize,
    pub pattern_vertices: usize,
    pub t: usize,
    pub s_bound: Rational,
    /// r − 1/s.
    pub exponent: Rational,
    /// Smallest integer edge count meeting the threshold.
    pub min_edges: u64,
    pub approx: f64,
}

impl KstThreshold {
    /// Decides e ≥ threshold exactly as (r!·e)^p ≥ (t + 2v)^q·n^{rp − q}.
    pub fn meets(&self, edges: u64) -> bool {
        let p = self.s_bound.numer().to_u64().unwrap();
        let q = self.s_bound.denom().to_u64().unwrap();
        let r = self.uniformity as u64;
        let lhs = num_traits::pow(BigUint::from(factorial(self.uniformity)) * BigUint::from(edges), p as usize);
        let rhs = exact::pow_uint((self.t + 2 * self.pattern_vertices) as u64, q) * exact::pow_uint(self.n as u64, r * p - q);
        lhs >= rhs
    }

    /// Whether the threshold can be met at all on n vertices.
    pub fn attainable(&self) -> bool {
        binomial(self.n, self.uniformity).to_u64().is_some_and(|m| self.meets(m))
    }
}

/// `f` is an (r−1)-graph; the threshold is for r-graphs. Any upper bound
/// `s_bound` on s(F) gives a valid (weaker) threshold.
pub fn kst_threshold(n: usize, f: &Hypergraph, t: usize, s_bound: &Rational) -> Result<KstThreshold> {
    if n == 0 {
        return Err(Error::InvalidParameter(String::from("n must be positive")));
    }
    if t == 0 {
        return Err(Error::InvalidParameter(String::from("t must be positive")));
    }
    if f.edge_count() == 0 {
        return Err(Error::EdgelessPattern);
    }
    if s_bound < &exact::int(f.edge_count() as i64) {
        return Err(Error::Hypothesis(format!("s bound {} is below e(F) = {}", s_bound, f.edge_count())));
    }
    let p = s_bound.numer().to_u64().ok_or_else(|| Error::SizeCap(String::from("s bound numerator")))?;
    let q = s_bound.denom().to_u64().ok_or_else(|| Error::SizeCap(String::from("s bound denominator")))?;
    if p > 4096 {
        return Err(Error::SizeCap(format!("s bound numerator {} too large", p)));
    }
    let r = f.uniformity() + 1;
    let v = f.vertex_count();
    let exponent = exact::int(r as i64) - Rational::new(q.into(), p.into());
    let inv_s = q as f64 / p as f64;
    let approx = libm::exp(inv_s * libm::log((t + 2 * v) as f64) + (r as f64 - inv_s) * libm::log(n as f64))
        / factorial(r) as f64;
    if !(approx < 1e18) {
        return Err(Error::SizeCap(String::from("threshold exceeds u64")));
    }
    let mut th = KstThreshold {
        n,
        uniformity: r,
        pattern_vertices: v,
        t,
        s_bound: s_bound.clone(),
        exponent,
        min_edges: 0,
        approx,
    };
    let mut e = libm::ceil(approx) as u64;
    while !th.meets(e) {
        e += 1;
    }
    while e > 0 && th.meets(e - 1) {
        e -= 1;
    }
    th.min_edges = e;
    Ok(th)
}

/// F(t): every edge of F joined with each of t new vertices `v(F)..v(F)+t`.
pub fn lift_hypergraph(f: &Hypergraph, t: usize) -> Result<Hypergraph> {
    let n = f.vertex_count();
    let mut edges = Vec::with_capacity(t * f.edge_count());
    for a in 0..t {
        for e in f.edges() {
            let mut g = e.to_vec();
            g.push((n + a) as Vertex);
            edges.push(g);
        }
    }
    Hypergraph::new(f.uniformity() + 1, n + t, edges)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LiftOutcome {
    /// φ is injective, `witness` ⊆ N_H(φ(F)) has t vertices outside φ's
    /// image, and `copy` maps F(t) into H.
    Found { phi: Vec<Vertex>, witness: Vec<Vertex>, copy: Vec<Vertex> },
    /// The search was exhaustive. `best` is the largest |N_H(φ(F)) ∖ φ(V(F))|
    /// over the complete φ it reached (branches already below t are cut).
    None { best: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingResult {
    pub host: Hypergraph,
    pub pattern: Hypergraph,
    pub t: usize,
    pub outcome: LiftOutcome,
    pub visits: u64,
}

impl EmbeddingResult {
    pub fn found(&self) -> bool {
        matches!(self.outcome, LiftOutcome::Found { .. })
    }
}

struct LiftSearch<'a> {
    h: &'a Hypergraph,
    f: &'a Hypergraph,
    t: usize,
    order: Vec<Vertex>,
    // edges of F closed when order[i] is placed
    closing: Vec<Vec<usize>>,
    phi: Vec<Vertex>,
    used: Vec<bool>,
    visits: u64,
    max_visits: u64,
    best: usize,
}

impl LiftSearch<'_> {
    fn free(&self, cand: &[bool]) -> usize {
        cand.iter().enumerate().filter(|&(u, &c)| c && !self.used[u]).count()
    }

    fn go(&mut self, depth: usize, cand: &[bool]) -> Result<Option<Vec<Vertex>>> {
        self.visits += 1;
        if self.visits > self.max_visits {
            return Err(Error::BudgetExceeded(self.max_visits));
        }
        if depth == self.order.len() {
            let free = self.free(cand);
            self.best = self.best.max(free);
            if free >= self.t {
                return Ok(Some((0..cand.len() as Vertex).filter(|&u| cand[u as usize] && !self.used[u as usize]).take(self.t).collect()));
            }
            return Ok(None);
        }
        let x = self.order[depth] as usize;
        let mut buf = Vec::with_capacity(self.h.uniformity());
        for y in 0..self.h.vertex_count() {
            if self.used[y] {
                continue;
            }
            self.phi[x] = y as Vertex;
            self.used[y] = true;
            let mut next = cand.to_vec();
            for &i in &self.closing[depth] {
                let e = self.f.edge(i);
                for (u, c) in next.iter_mut().enumerate() {
                    if *c {
                        buf.clear();
                        buf.extend(e.iter().map(|&w| self.phi[w as usize]));
                        buf.push(u as Vertex);
                        *c = self.h.contains_set(&buf);
                    }
                }
            }
            let free = self.free(&next);
            if free >= self.t || depth + 1 == self.order.len() {
                if let Some(w) = self.go(depth + 1, &next)? {
                    return Ok(Some(w));
                }
            }
            self.used[y] = false;
        }
        Ok(None)
    }
}

/// Searches an injective φ: V(F) → V(H) with |N_H(φ(F)) ∖ φ(V(F))| ≥ t.
/// Budget exhaustion is an error, distinct from an exhaustive `None`.
pub fn find_lift_copy(h: &Hypergraph, f: &Hypergraph, t: usize, max_visits: u64) -> Result<EmbeddingResult> {
    if h.uniformity() != f.uniformity() + 1 {
        return Err(Error::UniformityMismatch { expected: h.uniformity() - 1, found: f.uniformity() });
    }
    if t == 0 {
        return Err(Error::InvalidParameter(String::from("t must be positive")));
    }
    let v = f.vertex_count();
    let mut result = EmbeddingResult { host: h.clone(), pattern: f.clone(), t, outcome: LiftOutcome::None { best: 0 }, visits: 0 };
    if v + t > h.vertex_count() {
        return Ok(result);
    }
    // most constrained first: by degree, ties by index
    let degrees = f.degrees();
    let mut order: Vec<Vertex> = (0..v as Vertex).collect();
    order.sort_by_key(|&x| (core::cmp::Reverse(degrees[x as usize]), x));
    let mut position = vec![0usize; v];
    for (i, &x) in order.iter().enumerate() {
        position[x as usize] = i;
    }
    let mut closing = vec![Vec::new(); v];
    for (i, e) in f.edges().enumerate() {
        closing[e.iter().map(|&w| position[w as usize]).max().unwrap()].push(i);
    }
    let mut search = LiftSearch {
        h,
        f,
        t,
        order,
        closing,
        phi: vec![0; v],
        used: vec![false; h.vertex_count()],
        visits: 0,
        max_visits,
        best: 0,
    };
    let start = vec![true; h.vertex_count()];
    let found = search.go(0, &start)?;
    result.visits = search.visits;
    match found {
        Some(witness) => {
            let phi = search.phi.clone();
            let mut copy = phi.clone();
            copy.extend_from_slice(&witness);
            if !lift_hypergraph(f, t)?.is_subhypergraph_via(h, &copy)? {
                return Err(Error::Internal(String::from("lift copy failed verification")));
            }
            result.outcome = LiftOutcome::Found { phi, witness, copy };
        }
        None => result.outcome = LiftOutcome::None { best: search.best },
    }
    Ok(result)
}

/// ex(n, F) with one extremal host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalResult {
    pub n: usize,
    pub value: usize,
    pub host: Hypergraph,
    pub copies: usize,
    pub visits: u64,
}

fn ex_cap(r: usize, n: usize, f: &Hypergraph) -> Result<()> {
    let ok = match r {
        2 => n <= 8,
        3 => n <= 7 && f.vertex_count() <= 6,
        _ => binomial(n, r) <= BigUint::from(35u32),
    };
    if ok {
        Ok(())
    } else {
        Err(Error::SizeCap(format!("ex_small supports r = 2 with n <= 8 and r = 3 with n <= 7, v(F) <= 6; got r = {}, n = {}, v(F) = {}", r, n, f.vertex_count())))
    }
}

struct HittingSet<'a> {
    copies: &'a [u64],
    best: u32,
    best_set: u64,
    visits: u64,
    max_visits: u64,
}

impl HittingSet<'_> {
    fn go(&mut self, deleted: u64, mut kept: u64, k: u32) -> Result<()> {
        self.visits += 1;
        if self.visits > self.max_visits {
            return Err(Error::BudgetExceeded(self.max_visits));
        }
        let mut pick = None;
        let mut pick_free = u32::MAX;
        for &c in self.copies {
            if c & deleted != 0 {
                continue;
            }
            let free = c & !kept;
            if free == 0 {
                return Ok(());
            }
            if free.count_ones() < pick_free {
                pick_free = free.count_ones();
                pick = Some(free);
            }
        }
        let Some(free) = pick else {
            if k < self.best {
                self.best = k;
                self.best_set = deleted;
            }
            return Ok(());
        };
        // disjoint unhit copies each need their own deletion
        let mut packed = 0u64;
        let mut lb = 0u32;
        for &c in self.copies {
            let f = c & !kept;
            if c & deleted == 0 && f & packed == 0 {
                packed |= f;
                lb += 1;
            }
        }
        if k + lb >= self.best {
            return Ok(());
        }
        let mut bits = free;
        while bits != 0 {
            let e = bits & bits.wrapping_neg();
            bits &= bits - 1;
            self.go(deleted | e, kept, k + 1)?;
            kept |= e;
        }
        Ok(())
    }
}

/// Exact ex(n, F) as C(n, r) minus a minimum set of edges of K_n^{(r)}
/// meeting every copy of F, found by branch-and-bound.
pub fn ex_small(n: usize, f: &Hypergraph) -> Result<ExtremalResult> {
    ex_small_with(n, f, 1_000_000_000)
}

pub fn ex_small_with(n: usize, f: &Hypergraph, max_visits: u64) -> Result<ExtremalResult> {
    let r = f.uniformity();
    ex_cap(r, n, f)?;
    if f.edge_count() == 0 {
        return Err(Error::EdgelessPattern);
    }
    let complete = Hypergraph::complete(r, n);
    let m = complete.edge_count();
    let mut copy_set = BTreeSet::new();
    let mut buf = Vec::with_capacity(r);
    embed::for_each_embedding(f, &complete, &[], max_visits, |phi| {
        let mut mask = 0u64;
        for e in f.edges() {
            buf.clear();
            buf.extend(e.iter().map(|&w| phi[w as usize]));
            buf.sort_unstable();
            mask |= 1u64 << complete.edge_index(&buf).unwrap();
        }
        copy_set.insert(mask);
        true
    })?;
    let copies: Vec<u64> = copy_set.into_iter().collect();
    let mut hs = HittingSet { copies: &copies, best: m as u32 + 1, best_set: 0, visits: 0, max_visits };
    if copies.is_empty() {
        hs.best = 0;
    } else {
        hs.go(0, 0, 0)?;
    }
    let kept: Vec<&[Vertex]> = (0..m).filter(|&i| hs.best_set >> i & 1 == 0).map(|i| complete.edge(i)).collect();
    let host = Hypergraph::new(r, n, kept)?;
    if embed::find_embedding(f, &host)?.is_some() {
        return Err(Error::Internal(String::from("extremal host contains the pattern")));
    }
    Ok(ExtremalResult { n, value: host.edge_count(), host, copies: copies.len(), visits: hs.visits })
}

/// Deletion-method value max_p (p·C(n, r) − X·p^e) at a grid point near the
/// optimum, where X = hom(G, K_n^{(r)}) / aut(G) over-counts copies of G.
/// A heuristic lower bound on ex(n, G); never used in certificates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeletionBound {
    pub n: usize,
    pub edges_total: BigUint,
    pub copies: Rational,
    pub p: Rational,
    pub value: Rational,
}

const DELETION_GRID: i64 = 1 << 20;

pub fn deletion_lower(n: usize, g: &Hypergraph) -> Result<DeletionBound> {
    deletion_lower_with(n, g, &HomConfig::default())
}

pub fn deletion_lower_with(n: usize, g: &Hypergraph, cfg: &HomConfig) -> Result<DeletionBound> {
    let e = g.edge_count();
    if e == 0 {
        return Err(Error::EdgelessPattern);
    }
    let r = g.uniformity();
    let total = binomial(n, r);
    let (gc, _) = g.compact();
    let homs = hom::count_homomorphisms_with(&gc, &Hypergraph::complete(r, n), cfg)?;
    let aut = embed::automorphism_count(&gc)?;
    let copies = exact::ratio(&homs, &BigUint::from(aut));
    let total_q = exact::from_biguint(&total);
    let eval = |p: &Rational| -> Rational { p * &total_q - &copies * exact::pow(p, e as u64) };
    let mut best = (Rational::zero(), Rational::zero());
    if copies.is_zero() {
        best = (Rational::one(), total_q.clone());
    } else if e > 1 {
        // p* = (C(n,r) / (e·X))^{1/(e−1)}
        let ln_star = (exact::ln(&total_q) - libm::log(e as f64) - exact::ln(&copies)) / (e - 1) as f64;
        let star = libm::exp(ln_star).min(1.0);
        let lo = libm::floor(star * DELETION_GRID as f64) as i64;
        for k in [lo, lo + 1] {
            let k = k.clamp(0, DELETION_GRID);
            let p = exact::frac(k, DELETION_GRID);
            let v = eval(&p);
            if v > best.1 {
                best = (p, v);
            }
        }
    } else {
        let v = eval(&Rational::one());
        if v > best.1 {
            best = (Rational::one(), v);
        }
    }
    Ok(DeletionBound { n, edges_total: total, copies, p: best.0, value: best.1 })
}

/// Least-squares slope of log(value) against log(n) over positive points.
pub fn loglog_slope(points: &[DeletionBound]) -> Option<f64> {
    let pts: Vec<(f64, f64)> =
        points.iter().filter(|b| b.value > Rational::zero()).map(|b| (libm::log(b.n as f64), exact::ln(&b.value))).collect();
    if pts.len() < 2 {
        return None;
    }
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    Some(sxy / sxx)
}

/// Deletion bounds for G on a doubling sweep starting at `n0`.
pub fn deletion_sweep(g: &Hypergraph, n0: usize, steps: usize, cfg: &HomConfig) -> Result<Vec<DeletionBound>> {
    (0..steps).map(|i| deletion_lower_with(n0 << i, g, cfg)).collect()
}

/// ex(n, F) = O(n^{3 − 1/(e(G) + v(G)/2)}) for a 3-partite F whose designated
/// links all embed into the bipartite graph G.
pub fn bipartite_links_bound(f: &PartiteHypergraph, g: &Hypergraph) -> Result<BoundCertificate> {
    if f.uniformity() != 3 {
        return Err(Error::UniformityMismatch { expected: 3, found: f.uniformity() });
    }
    if g.uniformity() != 2 {
        return Err(Error::UniformityMismatch { expected: 2, found: g.uniformity() });
    }
    let (gc, _) = g.compact();
    if gc.edge_count() == 0 {
        return Err(Error::EdgelessPattern);
    }
    let mut transcript = Vec::new();
    let sides = PartiteHypergraph::detect(gc.clone()).map_err(|_| Error::Hypothesis(String::from("G is not bipartite")))?;
    let a = sides.part_vertices(1);
    let b = sides.part_vertices(2);
    transcript.push(Check { name: String::from("G is bipartite"), passed: true, detail: format!("sides {:?} and {:?}", a, b) });
    for link in f.designated_profile()?.entries {
        let emb = embed::find_embedding(&link.hypergraph, &gc)?;
        let passed = emb.is_some();
        transcript.push(Check {
            name: format!("link of {} embeds into G", link.anchor),
            passed,
            detail: match &emb {
                Some(phi) => format!("names {:?} map to {:?}", link.names, phi),
                None => String::from("no embedding"),
            },
        });
        if !passed {
            return Err(Error::NoEmbedding(format!("link of vertex {} does not embed into G", link.anchor)));
        }
    }
    transcript.push(Check {
        name: String::from("F is a sub-hypergraph of G(v(F))"),
        passed: true,
        detail: String::from("every designated vertex maps to its own lift vertex"),
    });
    // G plus a vertex complete to the smaller side
    let small = if a.len() <= b.len() { a } else { b };
    let apex = gc.vertex_count() as Vertex;
    let apexed = Hypergraph::new(2, gc.vertex_count() + 1, gc.edges().map(|e| e.to_vec()).chain(small.iter().map(|&u| vec![u, apex])))?;
    let s = exact::int(gc.edge_count() as i64) + exact::frac(gc.vertex_count() as i64, 2);
    transcript.push(Check {
        name: String::from("s(G) bound"),
        passed: true,
        detail: format!("e(G) + v(G)/2 = {} + {}/2 = {}; G with an apex over {} vertices has {} edges", gc.edge_count(), gc.vertex_count(), s, small.len(), apexed.edge_count()),
    });
    let bound = exact::int(3) - s.recip();
    transcript.push(Check { name: String::from("exponent"), passed: true, detail: format!("3 - 1/{} = {}", s, bound) });
    let assumption = Assumption {
        label: String::from("bipartite graph with a vertex complete to the other part"),
        subject: apexed,
        property: Property::Sidorenko,
        source: Source::Catalog(catalog::VERTEX_COMPLETE_TO_PART),
    };
    Ok(BoundCertificate {
        theorem: Theorem::BipartiteLinks,
        inputs: vec![
            (String::from("F"), format!("{:?}", f.hypergraph().edges().collect::<Vec<_>>())),
            (String::from("G"), format!("{:?}", gc.edges().collect::<Vec<_>>())),
        ],
        transcript,
        assumptions: vec![assumption],
        bound,
        instance_bound: None,
        pattern: Some(f.hypergraph().clone()),
        container: Some(gc),
    })
}

/// All r-subsets of `0..n`, in lexicographic order.
pub fn all_edges(r: usize, n: usize) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    for_each_subset(n, r, |s| out.push(s.to_vec()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions;
    use crate::exact::{frac, int};

    #[test]
    fn thresholds() {
        let c4 = constructions::cycle(4).unwrap();
        let th = kst_threshold(100, &c4, 2, &int(4)).unwrap();
        assert_eq!(th.exponent, frac(11, 4));
        assert!(th.meets(th.min_edges) && !th.meets(th.min_edges - 1));
        let c6 = constructions::cycle(6).unwrap();
        assert_eq!(kst_threshold(50, &c6, 1, &int(6)).unwrap().exponent, frac(17, 6));
        assert!(kst_threshold(10, &c4, 1, &int(3)).is_err());
        let k2 = Hypergraph::complete(2, 2);
        let th = kst_threshold(8, &k2, 1, &int(1)).unwrap();
        // 6e >= 5·64
        assert_eq!(th.min_edges, 54);
        assert!(th.attainable());
    }

    #[test]
    fn lift_copies() {
        let k2 = Hypergraph::complete(2, 2);
        let res = find_lift_copy(&Hypergraph::complete(3, 4), &k2, 2, 1_000_000).unwrap();
        assert!(res.found());
        let c6 = constructions::tight_cycle(3, 6).unwrap();
        let res = find_lift_copy(&c6, &k2, 3, 1_000_000).unwrap();
        assert_eq!(res.outcome, LiftOutcome::None { best: 2 });
        let res = find_lift_copy(&c6, &k2, 2, 1_000_000).unwrap();
        match res.outcome {
            LiftOutcome::Found { phi, witness, .. } => {
                assert_eq!(phi.len(), 2);
                assert_eq!(witness.len(), 2);
            }
            other => panic!("{:?}", other),
        }
        assert!(matches!(find_lift_copy(&Hypergraph::complete(3, 7), &k2, 1, 1), Err(Error::BudgetExceeded(1))));
    }

    #[test]
    fn small_extremal_numbers() {
        assert_eq!(ex_small(4, &Hypergraph::complete(2, 3)).unwrap().value, 4);
        assert_eq!(ex_small(5, &constructions::cycle(4).unwrap()).unwrap().value, 6);
        assert_eq!(ex_small(5, &Hypergraph::complete(3, 3)).unwrap().value, 0);
        assert_eq!(ex_small(3, &Hypergraph::complete(2, 4)).unwrap().value, 3);
        assert!(ex_small(9, &Hypergraph::complete(2, 3)).is_err());
    }

    #[test]
    fn deletion_values() {
        let b = deletion_lower(10, &Hypergraph::complete(2, 2)).unwrap();
        assert!(b.value.is_zero());
        let b = deletion_lower(16, &constructions::cycle(4).unwrap()).unwrap();
        assert!(b.value > int(0) && b.value < int(120));
    }

    #[test]
    fn bipartite_links_exponents() {
        let c4 = constructions::cycle(4).unwrap();
        let f = constructions::lift(&c4, 2).unwrap();
        assert_eq!(bipartite_links_bound(&f, &c4).unwrap().bound, frac(17, 6));
        let k2 = Hypergraph::complete(2, 2);
        let f = constructions::lift(&k2, 3).unwrap();
        assert_eq!(bipartite_links_bound(&f, &k2).unwrap().bound, frac(5, 2));
        let f = constructions::lift(&c4, 1).unwrap();
        assert!(bipartite_links_bound(&f, &k2).is_err());
    }
}
