//! Canonical classification data for homotopy classes of cospans.
//!
//! A connected graph is characterized up to homotopy by its first Betti
//! number, so a cospan class is determined by how its boundary ports are
//! partitioned into components together with each component's Betti number,
//! plus a multiset of Betti numbers for the components carrying no ports.
//! This is the same data that classifies 2-cobordisms (components, genus,
//! boundary assignment). The representation is canonical: structural
//! equality is morphism equality.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::cospan::GraphCospan;
use crate::graph::UnionFind;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NormalError {
    #[error("composition foot mismatch: left codomain has size {left_cod}, right domain has size {right_dom}")]
    FootMismatch { left_cod: usize, right_dom: usize },
}

/// A component touching at least one boundary port.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OpenComponent {
    pub in_ports: BTreeSet<usize>,
    pub out_ports: BTreeSet<usize>,
    pub betti: usize,
}

/// Canonical form of a cospan class.
///
/// Open components are sorted by smallest in-port, with in-port-free
/// components ordered after all others by smallest out-port. Closed
/// components are a sorted multiset of Betti numbers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalCospan {
    dom_size: usize,
    cod_size: usize,
    open_components: Vec<OpenComponent>,
    closed_components: Vec<usize>,
}

impl NormalCospan {
    pub fn new(
        dom_size: usize,
        cod_size: usize,
        mut open_components: Vec<OpenComponent>,
        mut closed_components: Vec<usize>,
    ) -> Self {
        canonical_sort(dom_size, &mut open_components);
        closed_components.sort_unstable();
        NormalCospan {
            dom_size,
            cod_size,
            open_components,
            closed_components,
        }
    }

    pub fn dom_size(&self) -> usize {
        self.dom_size
    }

    pub fn cod_size(&self) -> usize {
        self.cod_size
    }

    pub fn open_components(&self) -> &[OpenComponent] {
        &self.open_components
    }

    pub fn closed_components(&self) -> &[usize] {
        &self.closed_components
    }

    /// The identity normal form on `n`: one component per port pair.
    pub fn identity(n: usize) -> Self {
        NormalCospan {
            dom_size: n,
            cod_size: n,
            open_components: (0..n)
                .map(|i| OpenComponent {
                    in_ports: BTreeSet::from([i]),
                    out_ports: BTreeSet::from([i]),
                    betti: 0,
                })
                .collect(),
            closed_components: Vec::new(),
        }
    }

    /// Compose at the level of normal forms, without building graphs: the
    /// gluing multigraph has one node per component of `self` and `other`
    /// and one edge per middle port, joining the component that owns the
    /// port as an out-port to the one that owns it as an in-port. A merged
    /// component's Betti number is the sum over its members plus the cycle
    /// count of its patch of the gluing graph.
    pub fn compose(&self, other: &NormalCospan) -> Result<NormalCospan, NormalError> {
        if self.cod_size != other.dom_size {
            return Err(NormalError::FootMismatch {
                left_cod: self.cod_size,
                right_dom: other.dom_size,
            });
        }
        let p_open = self.open_components.len();
        let p_total = p_open + self.closed_components.len();
        let q_open = other.open_components.len();
        let node_count = p_total + q_open + other.closed_components.len();

        // who owns each middle port
        let mut out_owner = vec![usize::MAX; self.cod_size];
        for (i, c) in self.open_components.iter().enumerate() {
            for &p in &c.out_ports {
                out_owner[p] = i;
            }
        }
        let mut in_owner = vec![usize::MAX; other.dom_size];
        for (i, c) in other.open_components.iter().enumerate() {
            for &p in &c.in_ports {
                in_owner[p] = p_total + i;
            }
        }

        let mut uf = UnionFind::new(node_count);
        for a in 0..self.cod_size {
            uf.union(out_owner[a], in_owner[a]);
        }
        let labels = uf.canonical_labels();

        let node_betti = |node: usize| -> usize {
            if node < p_open {
                self.open_components[node].betti
            } else if node < p_total {
                self.closed_components[node - p_open]
            } else if node < p_total + q_open {
                other.open_components[node - p_total].betti
            } else {
                other.closed_components[node - p_total - q_open]
            }
        };

        #[derive(Default)]
        struct Merged {
            in_ports: BTreeSet<usize>,
            out_ports: BTreeSet<usize>,
            betti_sum: usize,
            nodes: usize,
            edges: usize,
        }
        let mut merged: BTreeMap<usize, Merged> = BTreeMap::new();
        for (node, &label) in labels.iter().enumerate() {
            let m = merged.entry(label).or_default();
            m.nodes += 1;
            m.betti_sum += node_betti(node);
            if node < p_open {
                m.in_ports.extend(self.open_components[node].in_ports.iter().copied());
            } else if (p_total..p_total + q_open).contains(&node) {
                m.out_ports
                    .extend(other.open_components[node - p_total].out_ports.iter().copied());
            }
        }
        for a in 0..self.cod_size {
            merged.get_mut(&labels[out_owner[a]]).unwrap().edges += 1;
        }

        let mut open = Vec::new();
        let mut closed = Vec::new();
        for m in merged.into_values() {
            let betti = m.betti_sum + m.edges + 1 - m.nodes;
            if m.in_ports.is_empty() && m.out_ports.is_empty() {
                closed.push(betti);
            } else {
                open.push(OpenComponent {
                    in_ports: m.in_ports,
                    out_ports: m.out_ports,
                    betti,
                });
            }
        }
        Ok(NormalCospan::new(self.dom_size, other.cod_size, open, closed))
    }

    /// Monoidal product: shift `other`'s port indices and concatenate.
    pub fn tensor(&self, other: &NormalCospan) -> NormalCospan {
        let mut open = self.open_components.clone();
        open.extend(other.open_components.iter().map(|c| OpenComponent {
            in_ports: c.in_ports.iter().map(|&p| p + self.dom_size).collect(),
            out_ports: c.out_ports.iter().map(|&p| p + self.cod_size).collect(),
            betti: c.betti,
        }));
        let mut closed = self.closed_components.clone();
        closed.extend_from_slice(&other.closed_components);
        NormalCospan::new(
            self.dom_size + other.dom_size,
            self.cod_size + other.cod_size,
            open,
            closed,
        )
    }
}

fn canonical_sort(dom_size: usize, components: &mut [OpenComponent]) {
    components.sort_by_key(|c| {
        c.in_ports
            .first()
            .copied()
            .unwrap_or_else(|| dom_size + c.out_ports.first().copied().unwrap_or(0))
    });
}

/// Decidable equality of cospan classes. The representation is canonical,
/// so this is plain structural comparison.
pub fn equal_normal(p: &NormalCospan, q: &NormalCospan) -> bool {
    p == q
}

/// Collapse a cospan to its classification data: component decomposition
/// and Betti numbers of the apex, with ports assigned through the legs.
pub fn normalize(cospan: &GraphCospan) -> NormalCospan {
    let comp_of = cospan.apex().components();
    let betti = cospan.apex().betti_numbers();
    let mut in_ports: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    let mut out_ports: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    for (a, &v) in cospan.leg_in().iter().enumerate() {
        in_ports.entry(comp_of[v]).or_default().insert(a);
    }
    for (b, &v) in cospan.leg_out().iter().enumerate() {
        out_ports.entry(comp_of[v]).or_default().insert(b);
    }
    let mut open = Vec::new();
    let mut closed = Vec::new();
    for (&comp, &b) in &betti {
        let ins = in_ports.remove(&comp).unwrap_or_default();
        let outs = out_ports.remove(&comp).unwrap_or_default();
        if ins.is_empty() && outs.is_empty() {
            closed.push(b);
        } else {
            open.push(OpenComponent {
                in_ports: ins,
                out_ports: outs,
                betti: b,
            });
        }
    }
    NormalCospan::new(cospan.dom().size(), cospan.cod().size(), open, closed)
}

/// Canonical textual encoding: one line per component in canonical order,
/// open components first, then closed components grouped by Betti number
/// with a multiplicity count.
impl fmt::Display for NormalCospan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.open_components {
            let ins: Vec<String> = c.in_ports.iter().map(|p| p.to_string()).collect();
            let outs: Vec<String> = c.out_ports.iter().map(|p| p.to_string()).collect();
            writeln!(
                f,
                "open in={{{}}} out={{{}}} b={}",
                ins.join(","),
                outs.join(","),
                c.betti
            )?;
        }
        let mut i = 0;
        while i < self.closed_components.len() {
            let b = self.closed_components[i];
            let mut count = 0;
            while i < self.closed_components.len() && self.closed_components[i] == b {
                count += 1;
                i += 1;
            }
            writeln!(f, "closed b={} (x{})", b, count)?;
        }
        Ok(())
    }
}
