//! Exact homomorphism counting.
//!
//! A pattern is split into connected components and the counts multiplied.
//! Within a component the vertices are split into a core and an independent
//! remainder (no edge holds two remainder vertices). The core is placed by
//! backtracking in greedy most-constrained order; once it is placed, each
//! remainder vertex has a fixed candidate set and contributes the size of
//! that set as a factor. Candidate sets are bitset intersections of host
//! co-neighbourhoods for r <= 3 and edge lookups otherwise.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::bitset::Bitset;
use crate::constructions;
use crate::exact;
use crate::hypergraph::{Hypergraph, Vertex};
use crate::{Error, Rational, Result};

/// Work limits for counting. `max_visits` bounds the number of partial
/// assignments explored; exceeding it is an error, never a truncated count.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HomConfig {
    pub max_visits: u64,
    /// Largest host (in vertices) a tensor power may be materialised into.
    pub max_tensor_vertices: usize,
}

impl Default for HomConfig {
    fn default() -> Self {
        HomConfig { max_visits: 1_000_000_000, max_tensor_vertices: 4096 }
    }
}

/// A total map V(F) → V(H).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Homomorphism {
    pub assignment: Vec<Vertex>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Proper,
    Degenerate,
}

/// t_F(H) = hom(F, H) / n^{v(F)}, kept exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Density {
    pub hom_count: BigUint,
    pub pattern_vertices: usize,
    pub host_vertices: BigUint,
    pub value: Rational,
}

impl Density {
    pub fn new(hom_count: BigUint, pattern_vertices: usize, host_vertices: BigUint) -> Self {
        let den = num_traits::pow(host_vertices.clone(), pattern_vertices);
        let value = exact::ratio(&hom_count, &den);
        Density { hom_count, pattern_vertices, host_vertices, value }
    }

    pub fn denominator(&self) -> BigUint {
        num_traits::pow(self.host_vertices.clone(), self.pattern_vertices)
    }
}

impl core::fmt::Display for Density {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}/{} = {}", self.hom_count, self.denominator(), self.value)
    }
}

enum IndexKind {
    Unary(Bitset),
    Graph(Vec<Bitset>),
    Triple(Vec<Bitset>),
    Generic,
}

/// Precomputed co-neighbourhood bitsets of a host.
pub struct HostIndex<'a> {
    host: &'a Hypergraph,
    kind: IndexKind,
}

const TRIPLE_INDEX_LIMIT: usize = 256;

impl<'a> HostIndex<'a> {
    pub fn new(host: &'a Hypergraph) -> Self {
        let n = host.vertex_count();
        let kind = match host.uniformity() {
            1 => {
                let mut b = Bitset::new(n);
                for e in host.edges() {
                    b.insert(e[0] as usize);
                }
                IndexKind::Unary(b)
            }
            2 => {
                let mut adj = vec![Bitset::new(n); n];
                for e in host.edges() {
                    adj[e[0] as usize].insert(e[1] as usize);
                    adj[e[1] as usize].insert(e[0] as usize);
                }
                IndexKind::Graph(adj)
            }
            3 if n <= TRIPLE_INDEX_LIMIT => {
                let mut pairs = vec![Bitset::new(n); n * n];
                for e in host.edges() {
                    let (a, b, c) = (e[0] as usize, e[1] as usize, e[2] as usize);
                    for (x, y, z) in [(a, b, c), (a, c, b), (b, c, a)] {
                        pairs[x * n + y].insert(z);
                        pairs[y * n + x].insert(z);
                    }
                }
                IndexKind::Triple(pairs)
            }
            _ => IndexKind::Generic,
        };
        HostIndex { host, kind }
    }

    pub fn host(&self) -> &Hypergraph {
        self.host
    }

    /// Writes into `out` the vertices `u` such that `img ∪ {u}` is an edge
    /// for every constraint tuple `img` (each of length r − 1).
    pub fn candidates<'c>(&self, constraints: impl Iterator<Item = &'c [Vertex]> + Clone, out: &mut Bitset) {
        let n = self.host.vertex_count();
        match &self.kind {
            IndexKind::Unary(b) => {
                out.copy_from(&Bitset::full(n));
                if constraints.clone().next().is_some() {
                    out.intersect_with(b);
                }
            }
            IndexKind::Graph(adj) => {
                let mut first = true;
                for c in constraints {
                    let s = &adj[c[0] as usize];
                    if first {
                        out.copy_from(s);
                        first = false;
                    } else {
                        out.intersect_with(s);
                    }
                }
                if first {
                    out.copy_from(&Bitset::full(n));
                }
            }
            IndexKind::Triple(pairs) => {
                let mut first = true;
                for c in constraints {
                    let s = &pairs[c[0] as usize * n + c[1] as usize];
                    if first {
                        out.copy_from(s);
                        first = false;
                    } else {
                        out.intersect_with(s);
                    }
                }
                if first {
                    out.copy_from(&Bitset::full(n));
                }
            }
            IndexKind::Generic => {
                out.copy_from(&Bitset::new(n));
                let r = self.host.uniformity();
                let mut buf: Vec<Vertex> = Vec::with_capacity(r);
                'outer: for u in 0..n as Vertex {
                    for c in constraints.clone() {
                        buf.clear();
                        buf.extend_from_slice(c);
                        buf.push(u);
                        if !self.host.contains_set(&buf) {
                            continue 'outer;
                        }
                    }
                    out.insert(u as usize);
                }
            }
        }
    }
}

/// Search plan for one connected component.
#[derive(Clone, Debug)]
pub struct ComponentPlan {
    /// Pattern vertices in placement order.
    pub order: Vec<Vertex>,
    /// For each position, the edges closed at that position written as the
    /// positions of their other vertices.
    constraints: Vec<Vec<Vec<usize>>>,
    /// Positions from here on are independent given the earlier ones.
    pub free_from: usize,
}

impl ComponentPlan {
    /// Builds the plan for a connected pattern (compactly indexed).
    pub fn new(component: &Hypergraph) -> Self {
        let n = component.vertex_count();
        let deg = component.degrees();
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (i, e) in component.edges().enumerate() {
            for &v in e {
                incident[v as usize].push(i);
            }
        }
        let mut adjacent = vec![0u128; n];
        if n <= 128 {
            for e in component.edges() {
                for &a in e {
                    for &b in e {
                        if a != b {
                            adjacent[a as usize] |= 1u128 << b;
                        }
                    }
                }
            }
        }
        let mut in_rest = vec![false; n];
        if n <= 128 {
            for v in independent_remainder(n, &adjacent, &deg) {
                in_rest[v] = true;
            }
        }
        // a component that is entirely independent is a single vertex or a
        // single 1-uniform edge; otherwise keep at least one core vertex so
        // the root can be split across workers
        let core: Vec<usize> = (0..n).filter(|&v| !in_rest[v]).collect();
        let mut order: Vec<Vertex> = Vec::with_capacity(n);
        let mut placed = vec![false; n];
        let mut remaining = core.clone();
        while !remaining.is_empty() {
            // most constrained: edges touching placed vertices, then edges
            // fully closed by placing v, then smallest index
            let score = |v: usize| -> (usize, usize) {
                let mut touching = 0;
                let mut closed = 0;
                for &i in &incident[v] {
                    let e = component.edge(i);
                    let others = e.iter().filter(|&&u| u as usize != v);
                    if others.clone().any(|&u| placed[u as usize]) {
                        touching += 1;
                    }
                    if others.clone().all(|&u| placed[u as usize]) {
                        closed += 1;
                    }
                }
                (touching, closed)
            };
            let (pos, _) = remaining
                .iter()
                .enumerate()
                .max_by(|(_, &a), (_, &b)| score(a).cmp(&score(b)).then(b.cmp(&a)))
                .unwrap();
            let v = remaining.remove(pos);
            placed[v] = true;
            order.push(v as Vertex);
        }
        let free_from = order.len();
        order.extend((0..n).filter(|&v| in_rest[v]).map(|v| v as Vertex));
        let mut position = vec![0usize; n];
        for (p, &v) in order.iter().enumerate() {
            position[v as usize] = p;
        }
        let mut constraints = vec![Vec::new(); n];
        for e in component.edges() {
            let last = e.iter().map(|&v| position[v as usize]).max().unwrap();
            let others: Vec<usize> =
                e.iter().map(|&v| position[v as usize]).filter(|&p| p != last).collect();
            constraints[last].push(others);
        }
        ComponentPlan { order, constraints, free_from }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

/// A large independent set of the 2-section, so that the core left to
/// enumerate is small. Greedy by lowest degree, then an exact
/// branch-and-bound with a node cap.
fn independent_remainder(n: usize, adjacent: &[u128], deg: &[usize]) -> Vec<usize> {
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by(|&a, &b| deg[a].cmp(&deg[b]).then(a.cmp(&b)));
    let mut best = 0u128;
    let mut blocked = 0u128;
    for &v in &by_degree {
        if blocked >> v & 1 == 0 {
            best |= 1u128 << v;
            blocked |= adjacent[v] | 1u128 << v;
        }
    }

    struct Mis<'a> {
        adjacent: &'a [u128],
        order: &'a [usize],
        best: u128,
        nodes: u32,
    }
    impl Mis<'_> {
        fn go(&mut self, i: usize, chosen: u128, candidates: u128) {
            self.nodes += 1;
            if self.nodes > 200_000 {
                return;
            }
            if chosen.count_ones() + candidates.count_ones() <= self.best.count_ones() {
                return;
            }
            let Some(&v) = self.order[i..].iter().find(|&&v| candidates >> v & 1 == 1) else {
                self.best = chosen;
                return;
            };
            let pos = self.order.iter().position(|&u| u == v).unwrap();
            self.go(pos + 1, chosen | 1u128 << v, candidates & !self.adjacent[v] & !(1u128 << v));
            self.go(pos + 1, chosen, candidates & !(1u128 << v));
        }
    }
    let all = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    let mut mis = Mis { adjacent, order: &by_degree, best, nodes: 0 };
    mis.go(0, 0, all);
    best = mis.best;
    (0..n).filter(|&v| best >> v & 1 == 1).collect()
}

/// Sum accumulator that stays in u128 until it overflows.
#[derive(Default)]
struct Acc {
    small: u128,
    big: BigUint,
}

impl Acc {
    fn add(&mut self, x: u128) {
        match self.small.checked_add(x) {
            Some(s) => self.small = s,
            None => {
                self.big += self.small;
                self.small = x;
            }
        }
    }

    fn add_big(&mut self, x: BigUint) {
        self.big += x;
    }

    fn total(self) -> BigUint {
        self.big + self.small
    }
}

struct Search<'a, 'b> {
    index: &'b HostIndex<'a>,
    plan: &'b ComponentPlan,
    images: Vec<Vertex>,
    buffers: Vec<Bitset>,
    tuple_buf: Vec<Vec<Vertex>>,
    visits: u64,
    max_visits: u64,
    acc: Acc,
}

impl<'a, 'b> Search<'a, 'b> {
    fn new(index: &'b HostIndex<'a>, plan: &'b ComponentPlan, max_visits: u64) -> Self {
        let n = index.host().vertex_count();
        let depth = plan.len();
        let max_c = plan.constraints.iter().map(|c| c.len()).max().unwrap_or(0);
        Search {
            index,
            plan,
            images: vec![0; depth],
            buffers: vec![Bitset::new(n); depth.max(1)],
            tuple_buf: vec![Vec::new(); max_c],
            visits: 0,
            max_visits,
            acc: Acc::default(),
        }
    }

    fn fill_candidates(&mut self, pos: usize) {
        let cons = &self.plan.constraints[pos];
        for (k, c) in cons.iter().enumerate() {
            let t = &mut self.tuple_buf[k];
            t.clear();
            t.extend(c.iter().map(|&p| self.images[p]));
        }
        let tuples = &self.tuple_buf[..cons.len()];
        self.index.candidates(tuples.iter().map(|t| t.as_slice()), &mut self.buffers[pos]);
    }

    fn tick(&mut self) -> Result<()> {
        self.visits += 1;
        if self.visits > self.max_visits {
            Err(Error::BudgetExceeded(self.max_visits))
        } else {
            Ok(())
        }
    }

    fn leaf(&mut self) -> Result<()> {
        self.tick()?;
        let mut prod: Option<u128> = Some(1);
        let mut big: Option<BigUint> = None;
        for pos in self.plan.free_from..self.plan.len() {
            self.fill_candidates(pos);
            let c = self.buffers[pos].count() as u128;
            if c == 0 {
                return Ok(());
            }
            match (&mut prod, &mut big) {
                (Some(p), _) => match p.checked_mul(c) {
                    Some(q) => *p = q,
                    None => {
                        big = Some(BigUint::from(*p) * c);
                        prod = None;
                    }
                },
                (None, Some(b)) => *b *= c,
                _ => unreachable!(),
            }
        }
        match (prod, big) {
            (Some(p), _) => self.acc.add(p),
            (None, Some(b)) => self.acc.add_big(b),
            _ => unreachable!(),
        }
        Ok(())
    }

    fn descend(&mut self, pos: usize) -> Result<()> {
        if pos == self.plan.free_from {
            return self.leaf();
        }
        self.fill_candidates(pos);
        let cands: Vec<usize> = self.buffers[pos].iter().collect();
        for u in cands {
            self.tick()?;
            self.images[pos] = u as Vertex;
            self.descend(pos + 1)?;
        }
        Ok(())
    }

    fn run_rooted(&mut self, root: Vertex) -> Result<()> {
        if self.plan.free_from == 0 {
            return self.leaf();
        }
        self.fill_candidates(0);
        if !self.buffers[0].contains(root as usize) {
            return Ok(());
        }
        self.images[0] = root;
        self.descend(1)
    }
}

/// Reusable counter for one (pattern, host) pair. Exposes per-component and
/// per-root counts so callers can distribute work; partial counts combine by
/// exact addition.
pub struct Counter<'a> {
    index: HostIndex<'a>,
    plans: Vec<ComponentPlan>,
    config: HomConfig,
}

impl<'a> Counter<'a> {
    pub fn new(pattern: &Hypergraph, host: &'a Hypergraph, config: HomConfig) -> Result<Self> {
        if pattern.uniformity() != host.uniformity() {
            return Err(Error::UniformityMismatch { expected: host.uniformity(), found: pattern.uniformity() });
        }
        let plans = pattern.components().iter().map(|c| ComponentPlan::new(&c.hypergraph)).collect();
        Ok(Counter { index: HostIndex::new(host), plans, config })
    }

    pub fn components(&self) -> &[ComponentPlan] {
        &self.plans
    }

    pub fn host_vertices(&self) -> usize {
        self.index.host().vertex_count()
    }

    /// Whether component `i` can be split by the image of its first vertex.
    pub fn splittable(&self, i: usize) -> bool {
        self.plans[i].free_from > 0
    }

    pub fn count_component(&self, i: usize) -> Result<BigUint> {
        let plan = &self.plans[i];
        let mut s = Search::new(&self.index, plan, self.config.max_visits);
        s.descend(0)?;
        Ok(s.acc.total())
    }

    /// Homomorphisms of component `i` whose first placed vertex maps to
    /// `root`. Summing over all roots gives [`Counter::count_component`].
    pub fn count_component_rooted(&self, i: usize, root: Vertex) -> Result<BigUint> {
        let plan = &self.plans[i];
        let mut s = Search::new(&self.index, plan, self.config.max_visits);
        s.run_rooted(root)?;
        Ok(s.acc.total())
    }

    pub fn count(&self) -> Result<BigUint> {
        let mut total = BigUint::one();
        for i in 0..self.plans.len() {
            let c = self.count_component(i)?;
            if c.is_zero() {
                return Ok(c);
            }
            total *= c;
        }
        Ok(total)
    }
}

/// hom(F, H) with the default budget.
pub fn count_homomorphisms(pattern: &Hypergraph, host: &Hypergraph) -> Result<BigUint> {
    count_homomorphisms_with(pattern, host, &HomConfig::default())
}

pub fn count_homomorphisms_with(pattern: &Hypergraph, host: &Hypergraph, config: &HomConfig) -> Result<BigUint> {
    Counter::new(pattern, host, *config)?.count()
}

pub fn density(pattern: &Hypergraph, host: &Hypergraph) -> Result<Density> {
    density_with(pattern, host, &HomConfig::default())
}

pub fn density_with(pattern: &Hypergraph, host: &Hypergraph, config: &HomConfig) -> Result<Density> {
    if host.vertex_count() == 0 {
        return Err(Error::EmptyHost);
    }
    let count = count_homomorphisms_with(pattern, host, config)?;
    Ok(Density::new(count, pattern.vertex_count(), BigUint::from(host.vertex_count())))
}

/// t_{K_r^{(r)}}(H) = r!·e(H)/n^r.
pub fn edge_density(host: &Hypergraph) -> Result<Rational> {
    if host.vertex_count() == 0 {
        return Err(Error::EmptyHost);
    }
    let r = host.uniformity() as u64;
    let fact: u64 = (1..=r).product();
    let num = BigUint::from(fact) * host.edge_count();
    Ok(exact::ratio(&num, &exact::pow_uint(host.vertex_count() as u64, r)))
}

/// Visits every homomorphism F → H in lexicographic order of the placement
/// sequence. The callback returns `false` to stop early. Returns the number
/// of homomorphisms visited.
pub fn for_each_homomorphism(
    pattern: &Hypergraph,
    host: &Hypergraph,
    config: &HomConfig,
    mut f: impl FnMut(&[Vertex]) -> bool,
) -> Result<u64> {
    if pattern.uniformity() != host.uniformity() {
        return Err(Error::UniformityMismatch { expected: host.uniformity(), found: pattern.uniformity() });
    }
    let n = pattern.vertex_count();
    let r = pattern.uniformity();
    // closing edges per vertex in index order
    let mut closing: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, e) in pattern.edges().enumerate() {
        closing[*e.iter().max().unwrap() as usize].push(i);
    }
    let hn = host.vertex_count() as Vertex;
    let mut assignment = vec![0 as Vertex; n];
    let mut visits = 0u64;
    let mut found = 0u64;
    let mut buf: Vec<Vertex> = Vec::with_capacity(r);

    #[allow(clippy::too_many_arguments)]
    fn go(
        v: usize,
        pattern: &Hypergraph,
        host: &Hypergraph,
        closing: &[Vec<usize>],
        hn: Vertex,
        assignment: &mut [Vertex],
        buf: &mut Vec<Vertex>,
        visits: &mut u64,
        found: &mut u64,
        max: u64,
        f: &mut dyn FnMut(&[Vertex]) -> bool,
    ) -> Result<bool> {
        if v == assignment.len() {
            *found += 1;
            return Ok(f(assignment));
        }
        for u in 0..hn {
            *visits += 1;
            if *visits > max {
                return Err(Error::BudgetExceeded(max));
            }
            assignment[v] = u;
            let ok = closing[v].iter().all(|&i| {
                buf.clear();
                buf.extend(pattern.edge(i).iter().map(|&w| assignment[w as usize]));
                host.contains_set(buf)
            });
            if ok && !go(v + 1, pattern, host, closing, hn, assignment, buf, visits, found, max, f)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
    go(
        0,
        pattern,
        host,
        &closing,
        hn,
        &mut assignment,
        &mut buf,
        &mut visits,
        &mut found,
        config.max_visits,
        &mut f,
    )?;
    Ok(found)
}

impl Homomorphism {
    pub fn new(assignment: Vec<Vertex>) -> Self {
        Homomorphism { assignment }
    }

    /// Checks that this assignment is a homomorphism from `pattern` to `host`.
    pub fn verify(&self, pattern: &Hypergraph, host: &Hypergraph) -> bool {
        if self.assignment.len() != pattern.vertex_count() || pattern.uniformity() != host.uniformity() {
            return false;
        }
        if self.assignment.iter().any(|&u| u as usize >= host.vertex_count()) {
            return false;
        }
        let mut buf = Vec::new();
        pattern.edges().all(|e| {
            buf.clear();
            buf.extend(e.iter().map(|&v| self.assignment[v as usize]));
            host.contains_set(&buf)
        })
    }

    /// φ|_{F'} for a sub-hypergraph F' given by its vertex inclusion into F.
    pub fn restrict(&self, pattern: &Hypergraph, sub: &Hypergraph, inclusion: &[Vertex]) -> Result<Homomorphism> {
        if inclusion.iter().any(|&v| v as usize >= self.assignment.len()) {
            return Err(Error::Injection(format!("inclusion leaves the pattern ({} vertices)", self.assignment.len())));
        }
        if !sub.is_subhypergraph_via(pattern, inclusion)? {
            return Err(Error::Injection(format!("{:?} is not a sub-hypergraph under the given inclusion", sub)));
        }
        Ok(Homomorphism { assignment: inclusion.iter().map(|&v| self.assignment[v as usize]).collect() })
    }

    /// Proper iff injective. For simple patterns a non-injective map shrinks
    /// the vertex set, and an injective one maps F onto an isomorphic copy.
    pub fn classify(&self) -> Kind {
        let mut seen: Vec<Vertex> = self.assignment.clone();
        seen.sort_unstable();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            Kind::Degenerate
        } else {
            Kind::Proper
        }
    }
}

/// Counts for a component-closed split: (hom(M,H), hom(M',H), hom(M−V(M'),H))
/// where M' is induced on `sub_vertices`. Errors if the split cuts an edge.
pub fn factor_count(pattern: &Hypergraph, sub_vertices: &[Vertex], host: &Hypergraph) -> Result<(BigUint, BigUint, BigUint)> {
    if !pattern.is_component_closed(sub_vertices) {
        return Err(Error::NotComponentClosed(format!("{:?}", sub_vertices)));
    }
    let mut sorted = sub_vertices.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let sub = pattern.induced(&sorted);
    let (rest, _) = pattern.remove_vertices(&sorted)?;
    let whole = count_homomorphisms(pattern, host)?;
    let a = count_homomorphisms(&sub, host)?;
    let b = count_homomorphisms(&rest, host)?;
    if &a * &b != whole {
        return Err(Error::Internal(format!("factorisation failed: {} != {} * {}", whole, a, b)));
    }
    Ok((whole, a, b))
}

/// Both sides of t_F(H^{⊗k}) = t_F(H)^k. The left side is counted in the
/// materialised tensor power; the right side is the k-th power of the
/// counted density, expressed as a density over n^k host vertices.
pub fn tensor_density_identity(pattern: &Hypergraph, host: &Hypergraph, k: u32, config: &HomConfig) -> Result<(Density, Density)> {
    if k == 0 {
        return Err(Error::InvalidParameter(format!("tensor power k = {}", k)));
    }
    let power = constructions::tensor_power(host, k, config.max_tensor_vertices)?;
    let lhs = density_with(pattern, &power, config)?;
    let base = density_with(pattern, host, config)?;
    let rhs = Density::new(
        num_traits::pow(base.hom_count, k as usize),
        pattern.vertex_count(),
        num_traits::pow(base.host_vertices, k as usize),
    );
    Ok((lhs, rhs))
}
