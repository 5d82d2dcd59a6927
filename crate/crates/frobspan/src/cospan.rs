//! Cospans of finite sets with graph apexes.
//!
//! A morphism from the finite set `A0` to the finite set `A1` is a cospan
//! `A0 -> X <- A1` whose apex `X` is a multigraph. Composition comes in two
//! flavours: gluing by attaching an interval per middle point (homotopy
//! pushout) and gluing by identifying matched points (strict set pushout).
//! Both compose representatives; the homotopy quotient is deferred entirely
//! to [`crate::normal::normalize`].

use thiserror::Error;

use crate::graph::{Graph, GraphError, UnionFind};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CospanError {
    #[error("composition foot mismatch: left codomain has size {left_cod}, right domain has size {right_dom}")]
    FootMismatch { left_cod: usize, right_dom: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("leg image {vertex} out of range (apex has {vertex_count} vertices)")]
    LegOutOfRange { vertex: usize, vertex_count: usize },
    #[error("leg length {actual} does not match foot size {expected}")]
    LegLengthMismatch { expected: usize, actual: usize },
}

/// A finite set; elements are the indices `0..size`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FinSet(pub usize);

impl FinSet {
    pub fn size(self) -> usize {
        self.0
    }
}

/// Which of the generator cospans to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    Mult,
    Unit,
    Comult,
    Counit,
    Swap,
}

/// Which pushout to use when composing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Semantics {
    /// Attach an interval per middle point; keeps track of cycles.
    #[default]
    Homotopy,
    /// Identify matched points; the set-level quotient.
    Strict,
}

/// A cospan `dom -> apex <- cod`. Legs are total functions into apex
/// vertices, neither injectivity nor joint surjectivity required.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphCospan {
    dom: FinSet,
    cod: FinSet,
    apex: Graph,
    leg_in: Vec<usize>,
    leg_out: Vec<usize>,
}

impl GraphCospan {
    pub fn new(
        apex: Graph,
        leg_in: Vec<usize>,
        leg_out: Vec<usize>,
    ) -> Result<Self, CospanError> {
        for &v in leg_in.iter().chain(&leg_out) {
            if v >= apex.vertex_count() {
                return Err(CospanError::LegOutOfRange {
                    vertex: v,
                    vertex_count: apex.vertex_count(),
                });
            }
        }
        Ok(GraphCospan {
            dom: FinSet(leg_in.len()),
            cod: FinSet(leg_out.len()),
            apex,
            leg_in,
            leg_out,
        })
    }

    pub fn dom(&self) -> FinSet {
        self.dom
    }

    pub fn cod(&self) -> FinSet {
        self.cod
    }

    pub fn apex(&self) -> &Graph {
        &self.apex
    }

    pub fn leg_in(&self) -> &[usize] {
        &self.leg_in
    }

    pub fn leg_out(&self) -> &[usize] {
        &self.leg_out
    }

    /// Identity cospan on `n`: a discrete apex of `n` points with both legs
    /// the identity indexing.
    pub fn identity(n: usize) -> Self {
        let legs: Vec<usize> = (0..n).collect();
        GraphCospan {
            dom: FinSet(n),
            cod: FinSet(n),
            apex: Graph::discrete(n),
            leg_in: legs.clone(),
            leg_out: legs,
        }
    }

    /// One of the generator cospans (multiplication, unit, comultiplication,
    /// counit, symmetry).
    pub fn generator(kind: Generator) -> Self {
        match kind {
            Generator::Mult => GraphCospan {
                dom: FinSet(2),
                cod: FinSet(1),
                apex: Graph::discrete(1),
                leg_in: vec![0, 0],
                leg_out: vec![0],
            },
            Generator::Unit => GraphCospan {
                dom: FinSet(0),
                cod: FinSet(1),
                apex: Graph::discrete(1),
                leg_in: vec![],
                leg_out: vec![0],
            },
            Generator::Comult => GraphCospan {
                dom: FinSet(1),
                cod: FinSet(2),
                apex: Graph::discrete(1),
                leg_in: vec![0],
                leg_out: vec![0, 0],
            },
            Generator::Counit => GraphCospan {
                dom: FinSet(1),
                cod: FinSet(0),
                apex: Graph::discrete(1),
                leg_in: vec![0],
                leg_out: vec![],
            },
            Generator::Swap => GraphCospan {
                dom: FinSet(2),
                cod: FinSet(2),
                apex: Graph::discrete(2),
                leg_in: vec![0, 1],
                leg_out: vec![1, 0],
            },
        }
    }

    /// Compose in diagrammatic order (`self` then `other`) by homotopy
    /// pushout: the apexes are placed side by side and one interval is
    /// attached per middle point, from the out-leg image in `self` to the
    /// in-leg image in `other`.
    pub fn compose_homotopy(&self, other: &GraphCospan) -> Result<GraphCospan, CospanError> {
        if self.cod.size() != other.dom.size() {
            return Err(CospanError::FootMismatch {
                left_cod: self.cod.size(),
                right_dom: other.dom.size(),
            });
        }
        let (union, map_l, map_r) = self.apex.disjoint_union(&other.apex);
        let intervals: Vec<(usize, usize)> = (0..self.cod.size())
            .map(|a| (map_l[self.leg_out[a]], map_r[other.leg_in[a]]))
            .collect();
        let apex = union.attach_edges(&intervals)?;
        Ok(GraphCospan {
            dom: self.dom,
            cod: other.cod,
            apex,
            leg_in: self.leg_in.iter().map(|&v| map_l[v]).collect(),
            leg_out: other.leg_out.iter().map(|&v| map_r[v]).collect(),
        })
    }

    /// Compose in diagrammatic order by strict set pushout: the matched
    /// vertices are identified and edges are carried along the quotient.
    /// Identifying the two endpoints of an existing edge creates a loop,
    /// which is kept (it is a genuine 1-cell).
    pub fn compose_strict(&self, other: &GraphCospan) -> Result<GraphCospan, CospanError> {
        if self.cod.size() != other.dom.size() {
            return Err(CospanError::FootMismatch {
                left_cod: self.cod.size(),
                right_dom: other.dom.size(),
            });
        }
        let (union, map_l, map_r) = self.apex.disjoint_union(&other.apex);
        let mut uf = UnionFind::new(union.vertex_count());
        for a in 0..self.cod.size() {
            uf.union(map_l[self.leg_out[a]], map_r[other.leg_in[a]]);
        }
        let labels = uf.canonical_labels();
        // renumber the surviving classes densely, keeping label order
        let mut class_index = vec![usize::MAX; union.vertex_count()];
        let mut next = 0;
        for v in 0..union.vertex_count() {
            if labels[v] == v {
                class_index[v] = next;
                next += 1;
            }
        }
        let quotient = |v: usize| class_index[labels[v]];
        let edges: Vec<(usize, usize)> = union
            .edges()
            .iter()
            .map(|&(u, v)| (quotient(u), quotient(v)))
            .collect();
        let apex = Graph::new(next, edges)?;
        Ok(GraphCospan {
            dom: self.dom,
            cod: other.cod,
            apex,
            leg_in: self.leg_in.iter().map(|&v| quotient(map_l[v])).collect(),
            leg_out: other.leg_out.iter().map(|&v| quotient(map_r[v])).collect(),
        })
    }

    pub fn compose(&self, other: &GraphCospan, semantics: Semantics) -> Result<GraphCospan, CospanError> {
        match semantics {
            Semantics::Homotopy => self.compose_homotopy(other),
            Semantics::Strict => self.compose_strict(other),
        }
    }

    /// Monoidal product: disjoint union of feet, apexes, and legs.
    pub fn tensor(&self, other: &GraphCospan) -> GraphCospan {
        let (apex, map_l, map_r) = self.apex.disjoint_union(&other.apex);
        let mut leg_in: Vec<usize> = self.leg_in.iter().map(|&v| map_l[v]).collect();
        leg_in.extend(other.leg_in.iter().map(|&v| map_r[v]));
        let mut leg_out: Vec<usize> = self.leg_out.iter().map(|&v| map_l[v]).collect();
        leg_out.extend(other.leg_out.iter().map(|&v| map_r[v]));
        GraphCospan {
            dom: FinSet(self.dom.size() + other.dom.size()),
            cod: FinSet(self.cod.size() + other.cod.size()),
            apex,
            leg_in,
            leg_out,
        }
    }

    /// Replace the apex by the mapping cylinder of `dom + cod -> apex`: one
    /// fresh vertex per foot element, whiskered to the original leg image,
    /// with the legs redirected to the fresh vertices. The resulting legs
    /// are jointly injective with pairwise disjoint images, and the normal
    /// form is unchanged (whiskers are trees).
    pub fn mapping_cylinder(&self) -> GraphCospan {
        let base = self.apex.vertex_count();
        let m = self.dom.size();
        let n = self.cod.size();
        let mut whiskers = Vec::with_capacity(m + n);
        for (a, &v) in self.leg_in.iter().enumerate() {
            whiskers.push((base + a, v));
        }
        for (b, &v) in self.leg_out.iter().enumerate() {
            whiskers.push((base + m + b, v));
        }
        let mut edges = self.apex.edges().to_vec();
        edges.extend(whiskers);
        let apex = Graph::new(base + m + n, edges).expect("whisker endpoints are in range");
        GraphCospan {
            dom: self.dom,
            cod: self.cod,
            apex,
            leg_in: (base..base + m).collect(),
            leg_out: (base + m..base + m + n).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normal::normalize;

    #[test]
    fn identity_zero_is_empty() {
        let id0 = GraphCospan::identity(0);
        assert_eq!(id0.dom(), FinSet(0));
        assert_eq!(id0.cod(), FinSet(0));
        assert_eq!(id0.apex().vertex_count(), 0);
    }

    #[test]
    fn identity_one_is_a_point() {
        let id1 = GraphCospan::identity(1);
        assert_eq!(id1.leg_in(), &[0]);
        assert_eq!(id1.leg_out(), &[0]);
        assert_eq!(id1.apex().vertex_count(), 1);
    }

    #[test]
    fn mult_generator_shape() {
        let m = GraphCospan::generator(Generator::Mult);
        assert_eq!(m.dom(), FinSet(2));
        assert_eq!(m.cod(), FinSet(1));
        assert_eq!(m.apex().vertex_count(), 1);
    }

    #[test]
    fn unit_generator_shape() {
        let u = GraphCospan::generator(Generator::Unit);
        assert_eq!(u.dom(), FinSet(0));
        assert_eq!(u.cod(), FinSet(1));
        assert_eq!(u.apex().vertex_count(), 1);
    }

    #[test]
    fn swap_squared_is_identity_up_to_homotopy() {
        let s = GraphCospan::generator(Generator::Swap);
        let ss = s.compose_homotopy(&s).unwrap();
        assert_eq!(normalize(&ss), normalize(&GraphCospan::identity(2)));
    }

    #[test]
    fn handle_composite_has_two_parallel_intervals() {
        let comult = GraphCospan::generator(Generator::Comult);
        let mult = GraphCospan::generator(Generator::Mult);
        let handle = comult.compose_homotopy(&mult).unwrap();
        assert_eq!(handle.apex().vertex_count(), 2);
        assert_eq!(handle.apex().edge_count(), 2);
        assert_eq!(handle.apex().betti_numbers()[&0], 1);
    }

    #[test]
    fn homotopy_composition_is_unital_up_to_normal_form() {
        let comult = GraphCospan::generator(Generator::Comult);
        let pre = GraphCospan::identity(1).compose_homotopy(&comult).unwrap();
        let post = comult.compose_homotopy(&GraphCospan::identity(2)).unwrap();
        assert_eq!(normalize(&pre), normalize(&comult));
        assert_eq!(normalize(&post), normalize(&comult));
    }

    #[test]
    fn unit_then_counit_is_a_closed_circle_free_component() {
        let u = GraphCospan::generator(Generator::Unit);
        let c = GraphCospan::generator(Generator::Counit);
        let sphere = u.compose_homotopy(&c).unwrap();
        assert_eq!(sphere.apex().vertex_count(), 2);
        assert_eq!(sphere.apex().edge_count(), 1);
        let n = normalize(&sphere);
        assert!(n.open_components().is_empty());
        assert_eq!(n.closed_components(), &[0]);
    }

    #[test]
    fn strict_comult_mult_is_the_identity() {
        let comult = GraphCospan::generator(Generator::Comult);
        let mult = GraphCospan::generator(Generator::Mult);
        let composite = comult.compose_strict(&mult).unwrap();
        assert_eq!(normalize(&composite), normalize(&GraphCospan::identity(1)));
    }

    #[test]
    fn strict_unit_counit_is_a_closed_point() {
        let u = GraphCospan::generator(Generator::Unit);
        let c = GraphCospan::generator(Generator::Counit);
        let composite = u.compose_strict(&c).unwrap();
        assert_eq!(composite.apex().vertex_count(), 1);
        let n = normalize(&composite);
        assert_eq!(n.closed_components(), &[0]);
    }

    #[test]
    fn strict_identification_can_create_a_loop() {
        // apex is a single edge whose endpoints are both out-boundary;
        // composing with a cospan gluing them together bends the edge
        // into a loop.
        let edge = GraphCospan::new(
            Graph::new(2, vec![(0, 1)]).unwrap(),
            vec![],
            vec![0, 1],
        )
        .unwrap();
        let merge = GraphCospan::new(Graph::discrete(1), vec![0, 0], vec![]).unwrap();
        let glued = edge.compose_strict(&merge).unwrap();
        assert_eq!(glued.apex().vertex_count(), 1);
        assert_eq!(glued.apex().betti_numbers()[&0], 1);
    }

    #[test]
    fn composition_rejects_foot_mismatch() {
        let mult = GraphCospan::generator(Generator::Mult);
        let err = mult.compose_homotopy(&mult).unwrap_err();
        assert_eq!(
            err,
            CospanError::FootMismatch {
                left_cod: 1,
                right_dom: 2
            }
        );
        assert!(mult.compose_strict(&mult).is_err());
    }

    #[test]
    fn tensor_with_empty_is_identity() {
        let mult = GraphCospan::generator(Generator::Mult);
        let empty = GraphCospan::identity(0);
        assert_eq!(mult.tensor(&empty), mult);
    }

    #[test]
    fn tensor_mult_unit_shape() {
        let t = GraphCospan::generator(Generator::Mult).tensor(&GraphCospan::generator(Generator::Unit));
        assert_eq!(t.dom(), FinSet(2));
        assert_eq!(t.cod(), FinSet(2));
        assert_eq!(t.apex().vertex_count(), 2);
    }

    #[test]
    fn mapping_cylinder_of_mult_has_three_whiskers() {
        let cyl = GraphCospan::generator(Generator::Mult).mapping_cylinder();
        assert_eq!(cyl.apex().vertex_count(), 4);
        assert_eq!(cyl.apex().edge_count(), 3);
        assert_eq!(normalize(&cyl), normalize(&GraphCospan::generator(Generator::Mult)));
    }

    #[test]
    fn mapping_cylinder_legs_are_disjoint_embeddings() {
        let comult = GraphCospan::generator(Generator::Comult);
        let cyl = comult.mapping_cylinder();
        let mut images: Vec<usize> = cyl.leg_in().iter().chain(cyl.leg_out()).copied().collect();
        let len = images.len();
        images.sort_unstable();
        images.dedup();
        assert_eq!(images.len(), len);
    }

    #[test]
    fn mapping_cylinder_of_identity_is_a_path() {
        let cyl = GraphCospan::identity(1).mapping_cylinder();
        assert_eq!(cyl.apex().vertex_count(), 3);
        assert_eq!(cyl.apex().edge_count(), 2);
        assert_eq!(cyl.apex().betti_numbers()[&0], 0);
        assert_eq!(normalize(&cyl), normalize(&GraphCospan::identity(1)));
    }
}
