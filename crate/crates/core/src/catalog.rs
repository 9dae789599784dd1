//! Families with known Sidorenko, dominating or (weakly) norming behaviour,
//! each tagged with where the fact comes from. Membership is never decided
//! by computation; recognisers only match a given hypergraph against the
//! families by structure and isomorphism.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::constructions;
use crate::embed::is_isomorphic;
use crate::hypergraph::{Hypergraph, PartiteHypergraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Property {
    Sidorenko,
    Dominating,
    WeaklyNorming,
    Norming,
}

impl Property {
    /// Whether having `self` implies having `other`.
    pub fn implies(self, other: Property) -> bool {
        use Property::*;
        matches!(
            (self, other),
            (Norming, _) | (WeaklyNorming, WeaklyNorming | Dominating | Sidorenko) | (Dominating, Dominating | Sidorenko)
        ) || self == other
    }

    pub fn name(self) -> &'static str {
        match self {
            Property::Sidorenko => "sidorenko",
            Property::Dominating => "dominating",
            Property::WeaklyNorming => "weakly-norming",
            Property::Norming => "norming",
        }
    }
}

/// A family member with its strongest known property and provenance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub name: String,
    pub hypergraph: Hypergraph,
    pub property: Property,
    pub provenance: &'static str,
}

pub const EVEN_CYCLE: &str = "even cycles are norming (Hatami)";
pub const COMPLETE_PARTITE: &str = "complete r-partite r-graphs are norming (Hatami)";
pub const HYPERCUBE: &str = "hypercube graphs are weakly norming (Hatami)";
pub const OCTAHEDRON: &str = "K^{(r)}_{2,...,2} is norming (Gowers octahedral norm)";
pub const TENSOR_OF_EVEN_CYCLES: &str = "tensor of even cycles: weakly norming is closed under tensor products (Hatami)";
pub const TENSOR_WITH_KMM: &str = "G tensor K_{m,m} is dominating when G is dominating (Conlon-Lee)";
pub const TREE: &str = "trees are Sidorenko (Sidorenko; Alon-Ruzsa)";
pub const DISJOINT_COPIES: &str = "disjoint copies of one dominating (weakly norming) hypergraph keep the property";
pub const VERTEX_COMPLETE_TO_PART: &str = "bipartite graphs with a vertex complete to the other part are Sidorenko (Conlon-Fox-Sudakov)";
pub const DISJOINT_UNION: &str = "disjoint unions of Sidorenko hypergraphs are Sidorenko (density factorises)";

/// The curated list of dominating families up to `max_vertices` vertices.
pub fn dominating_families(max_vertices: usize) -> Vec<Entry> {
    let mut out = Vec::new();
    let mut push = |name: String, h: Hypergraph, property: Property, provenance: &'static str| {
        if h.vertex_count() <= max_vertices {
            out.push(Entry { name, hypergraph: h, property, provenance });
        }
    };
    for l in 2..=max_vertices / 2 {
        push(format!("C_{}", 2 * l), constructions::cycle(2 * l).unwrap(), Property::Norming, EVEN_CYCLE);
    }
    for a in 1..=max_vertices {
        for b in a..=max_vertices - a {
            let k = constructions::complete_partite(&[a, b]).unwrap().into_hypergraph();
            push(format!("K_{{{},{}}}", a, b), k, Property::Norming, COMPLETE_PARTITE);
        }
    }
    for r in 3..=4 {
        for sizes in [[1usize, 1, 1, 1], [1, 1, 1, 2], [1, 1, 2, 2], [2, 2, 2, 2]] {
            let s = &sizes[4 - r..];
            if s.iter().sum::<usize>() <= max_vertices {
                let k = constructions::complete_partite(s).unwrap().into_hypergraph();
                let tag = if s.iter().all(|&t| t == 2) { OCTAHEDRON } else { COMPLETE_PARTITE };
                push(format!("K^({})_{:?}", r, s), k, Property::Norming, tag);
            }
        }
    }
    for d in 2..=6 {
        if 1usize << d <= max_vertices {
            push(format!("Q_{}", d), constructions::hypercube(d).unwrap(), Property::WeaklyNorming, HYPERCUBE);
        }
    }
    for k in 2..=5 {
        if 4 * k * k <= max_vertices {
            push(format!("T_{}", k), constructions::torus(k).unwrap(), Property::WeaklyNorming, TENSOR_OF_EVEN_CYCLES);
        }
    }
    for l in 2..=4 {
        for m in 1..=3 {
            if 2 * l * 2 * m <= max_vertices {
                let c = constructions::cycle(2 * l).unwrap();
                let kmm = constructions::complete_partite(&[m, m]).unwrap().into_hypergraph();
                let t = constructions::tensor_product(&c, &kmm).unwrap();
                push(format!("C_{} x K_{{{},{}}}", 2 * l, m, m), t, Property::Dominating, TENSOR_WITH_KMM);
            }
        }
    }
    out
}

/// A positive identification of a hypergraph against the catalog.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recognition {
    pub family: String,
    pub property: Property,
    pub provenance: &'static str,
}

fn without_isolated(h: &Hypergraph) -> Hypergraph {
    h.induced(&h.covered_vertices())
}

fn recognize_connected(h: &Hypergraph) -> Option<Recognition> {
    let r = h.uniformity();
    let n = h.vertex_count();
    let e = h.edge_count();
    let stats = h.degree_stats();
    if r == 1 {
        // every vertex is an edge: K^{(1)}_n
        return (e == n && n > 0).then(|| Recognition {
            family: format!("K^(1)_{}", n),
            property: Property::Norming,
            provenance: COMPLETE_PARTITE,
        });
    }
    if r == 2 && n >= 4 && n.is_multiple_of(2) && stats.max_degree == 2 && stats.min_degree == 2 {
        return Some(Recognition { family: format!("C_{}", n), property: Property::Norming, provenance: EVEN_CYCLE });
    }
    if let Ok(p) = PartiteHypergraph::detect(h.clone()) {
        let sizes: Vec<usize> = (1..=r as u8).map(|c| p.part_vertices(c).len()).collect();
        if sizes.iter().product::<usize>() == e {
            let tag = if sizes.iter().all(|&t| t == 2) { OCTAHEDRON } else { COMPLETE_PARTITE };
            return Some(Recognition {
                family: format!("K^({})_{:?}", r, sizes),
                property: Property::Norming,
                provenance: tag,
            });
        }
    }
    if r == 2 && e + 1 == n {
        return Some(Recognition { family: format!("tree on {} vertices", n), property: Property::Sidorenko, provenance: TREE });
    }
    if r == 2 && n.is_power_of_two() && n >= 4 {
        let d = n.trailing_zeros() as usize;
        if stats.max_degree == d && stats.min_degree == d && is_isomorphic(h, &constructions::hypercube(d).ok()?).ok()? {
            return Some(Recognition { family: format!("Q_{}", d), property: Property::WeaklyNorming, provenance: HYPERCUBE });
        }
    }
    if r == 2 && n <= 36 {
        return recognize_listed(h);
    }
    None
}

fn recognize_listed(h: &Hypergraph) -> Option<Recognition> {
    for entry in dominating_families(36) {
        let g = &entry.hypergraph;
        if g.vertex_count() == h.vertex_count() && g.edge_count() == h.edge_count() && is_isomorphic(h, g).ok()? {
            return Some(Recognition { family: entry.name, property: entry.property, provenance: entry.provenance });
        }
    }
    None
}

/// Matches `h` (isolated vertices ignored) against the catalog.
pub fn recognize(h: &Hypergraph) -> Option<Recognition> {
    let core = without_isolated(h);
    if core.edge_count() == 0 {
        return None;
    }
    if core.is_connected() {
        return recognize_connected(&core);
    }
    if core.uniformity() == 2 && core.vertex_count() <= 36 {
        if let Some(rec) = recognize_listed(&core) {
            return Some(rec);
        }
    }
    let comps = core.components();
    let mut recs = Vec::new();
    for c in &comps {
        let rec = recognize_connected(&c.hypergraph)?;
        if !rec.property.implies(Property::Sidorenko) {
            return None;
        }
        recs.push(rec);
    }
    let first = &comps[0].hypergraph;
    let copies = comps.iter().all(|c| is_isomorphic(first, &c.hypergraph).unwrap_or(false));
    if copies && recs[0].property.implies(Property::Dominating) {
        let property = recs[0].property.min(Property::WeaklyNorming);
        return Some(Recognition {
            family: format!("{} copies of {}", comps.len(), recs[0].family),
            property,
            provenance: DISJOINT_COPIES,
        });
    }
    let names: Vec<String> = recs.into_iter().map(|r| r.family).collect();
    Some(Recognition { family: names.join(" + "), property: Property::Sidorenko, provenance: DISJOINT_UNION })
}

pub fn has_property(h: &Hypergraph, property: Property) -> Option<Recognition> {
    recognize(h).filter(|r| r.property.implies(property))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_contents() {
        let fams = dominating_families(36);
        let t2 = fams.iter().find(|e| e.name == "T_2").unwrap();
        assert_eq!(t2.provenance, TENSOR_OF_EVEN_CYCLES);
        assert!(fams.iter().any(|e| e.name == "C_6"));
        let g3 = constructions::grid(3).unwrap();
        assert!(!fams.iter().any(|e| e.hypergraph.vertex_count() == 9 && is_isomorphic(&e.hypergraph, &g3).unwrap()));
    }

    #[test]
    fn recognisers() {
        let c6 = constructions::cycle(6).unwrap();
        assert!(has_property(&c6, Property::Dominating).is_some());
        assert!(has_property(&constructions::cycle(5).unwrap(), Property::Sidorenko).is_none());
        assert!(has_property(&constructions::grid(3).unwrap(), Property::Dominating).is_none());
        assert!(has_property(&constructions::grid(2).unwrap(), Property::Dominating).is_some());
        let two = constructions::disjoint_edges(2, 2).unwrap();
        assert_eq!(has_property(&two, Property::Dominating).unwrap().provenance, DISJOINT_COPIES);
        let mixed = Hypergraph::new(2, 5, [[0, 1], [2, 3], [3, 4]]).unwrap();
        assert_eq!(has_property(&mixed, Property::Sidorenko).unwrap().provenance, DISJOINT_UNION);
        assert!(has_property(&mixed, Property::Dominating).is_none());
        assert!(has_property(&constructions::path(5).unwrap(), Property::Sidorenko).is_some());
        assert!(has_property(&constructions::hypercube(3).unwrap(), Property::Dominating).is_some());
        assert!(has_property(&constructions::torus(2).unwrap(), Property::Dominating).is_some());
        let oct = constructions::complete_partite(&[2, 2, 2]).unwrap().into_hypergraph();
        assert_eq!(recognize(&oct).unwrap().provenance, OCTAHEDRON);
        assert!(recognize(&constructions::loose_triangle()).is_none());
    }
}
