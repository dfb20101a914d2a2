//! Block graphs: the bipartite mutual incidence multigraph of two designs,
//! its merged self-version, and (S-)block intersection graphs.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_traits::ToPrimitive;

use crate::design::Design;
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::mutual::mutual_matrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MultigraphKind {
    /// Left and right vertices are blocks of two designs.
    Bipartite,
    /// One vertex per block of a single design; the matrix is square,
    /// symmetric and zero on the diagonal.
    MergedSelf,
}

/// A multigraph stored as its edge multiplicity matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    pub kind: MultigraphKind,
    pub left_vertices: Vec<String>,
    pub right_vertices: Vec<String>,
    pub edge_multiplicity: IntMatrix,
}

impl Multigraph {
    /// Total number of edges counted with multiplicity.
    pub fn edge_count(&self) -> u64 {
        let m = &self.edge_multiplicity;
        let mut total = 0u64;
        for i in 0..m.rows() {
            let start = match self.kind {
                MultigraphKind::Bipartite => 0,
                MultigraphKind::MergedSelf => i + 1,
            };
            for j in start..m.cols() {
                total += m
                    .get(i, j)
                    .to_u64()
                    .expect("multiplicities are small and nonnegative");
            }
        }
        total
    }

    pub fn vertex_count(&self) -> usize {
        match self.kind {
            MultigraphKind::Bipartite => self.left_vertices.len() + self.right_vertices.len(),
            MultigraphKind::MergedSelf => self.left_vertices.len(),
        }
    }

    /// Degrees of the left vertices, then (bipartite only) the right ones.
    pub fn degrees(&self) -> Vec<u64> {
        let to_u64 = |x: num_bigint::BigInt| x.to_u64().expect("nonnegative");
        let m = &self.edge_multiplicity;
        let mut d: Vec<u64> = m.row_sums().into_iter().map(to_u64).collect();
        if self.kind == MultigraphKind::Bipartite {
            d.extend(m.col_sums().into_iter().map(to_u64));
        }
        d
    }
}

/// Simple graph on blocks, symmetric 0/1 adjacency with empty diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    pub vertices: Vec<String>,
    pub adjacency: Vec<Vec<bool>>,
}

impl SimpleGraph {
    pub fn edge_count(&self) -> usize {
        self.adjacency
            .iter()
            .enumerate()
            .map(|(i, row)| row[i + 1..].iter().filter(|&&a| a).count())
            .sum()
    }

    pub fn is_adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacency[i][j]
    }
}

fn labels(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}B{i}")).collect()
}

/// Bipartite multigraph whose multiplicity matrix is `M(d1, d2)`.
pub fn mutual_incidence_graph(d1: &Design, d2: &Design) -> Result<Multigraph> {
    let m = mutual_matrix(d1, d2)?.m;
    Ok(Multigraph {
        kind: MultigraphKind::Bipartite,
        left_vertices: labels("D1_", d1.b()),
        right_vertices: labels("D2_", d2.b()),
        edge_multiplicity: m,
    })
}

/// `M(d, d)` with each block's two copies merged and the `k` edges between
/// them dropped, i.e. the diagonal set to zero.
pub fn merged_self_graph(d: &Design) -> Multigraph {
    let mut m = mutual_matrix(d, d).expect("same design").m;
    for i in 0..m.rows() {
        m.set(i, i, 0.into());
    }
    let names = labels("", d.b());
    Multigraph {
        kind: MultigraphKind::MergedSelf,
        left_vertices: names.clone(),
        right_vertices: names,
        edge_multiplicity: m,
    }
}

/// Blocks adjacent iff they intersect.
pub fn block_intersection_graph(d: &Design) -> SimpleGraph {
    let sizes: BTreeSet<usize> = (1..=d.k()).collect();
    s_block_intersection_graph(d, &sizes).expect("size set is nonempty")
}

/// Blocks adjacent iff their intersection size lies in `sizes`.
pub fn s_block_intersection_graph(d: &Design, sizes: &BTreeSet<usize>) -> Result<SimpleGraph> {
    if sizes.is_empty() {
        return Err(Error::EmptySizeSet);
    }
    let blocks = d.blocks();
    let n = blocks.len();
    let adjacency = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| i != j && sizes.contains(&blocks[i].intersection_size(&blocks[j])))
                .collect()
        })
        .collect();
    Ok(SimpleGraph {
        vertices: labels("", n),
        adjacency,
    })
}

/// Either graph flavour, for export.
#[derive(Debug, Clone, Copy)]
pub enum GraphRef<'a> {
    Multi(&'a Multigraph),
    Simple(&'a SimpleGraph),
}

impl<'a> From<&'a Multigraph> for GraphRef<'a> {
    fn from(g: &'a Multigraph) -> Self {
        GraphRef::Multi(g)
    }
}

impl<'a> From<&'a SimpleGraph> for GraphRef<'a> {
    fn from(g: &'a SimpleGraph) -> Self {
        GraphRef::Simple(g)
    }
}

/// Graphviz DOT text. Vertices first, then edges in row-major order; a
/// multiplicity of `m` is written as `m` parallel edge lines.
pub fn export_dot<'a>(g: impl Into<GraphRef<'a>>) -> String {
    let mut out = String::new();
    match g.into() {
        GraphRef::Multi(g) => {
            let name = match g.kind {
                MultigraphKind::Bipartite => "mutual_incidence",
                MultigraphKind::MergedSelf => "merged_self",
            };
            let _ = writeln!(out, "graph {name} {{");
            let right: &[String] = match g.kind {
                MultigraphKind::Bipartite => &g.right_vertices,
                MultigraphKind::MergedSelf => &[],
            };
            for v in g.left_vertices.iter().chain(right) {
                let _ = writeln!(out, "  {v};");
            }
            let m = &g.edge_multiplicity;
            for i in 0..m.rows() {
                let start = match g.kind {
                    MultigraphKind::Bipartite => 0,
                    MultigraphKind::MergedSelf => i + 1,
                };
                for j in start..m.cols() {
                    let mult = m.get(i, j).to_u64().expect("nonnegative multiplicity");
                    for _ in 0..mult {
                        let _ =
                            writeln!(out, "  {} -- {};", g.left_vertices[i], g.right_vertices[j]);
                    }
                }
            }
        }
        GraphRef::Simple(g) => {
            let _ = writeln!(out, "graph block_intersection {{");
            for v in &g.vertices {
                let _ = writeln!(out, "  {v};");
            }
            for i in 0..g.vertices.len() {
                for j in i + 1..g.vertices.len() {
                    if g.adjacency[i][j] {
                        let _ = writeln!(out, "  {} -- {};", g.vertices[i], g.vertices[j]);
                    }
                }
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete_design, fixture, trivial_design};

    fn edge_lines(dot: &str) -> usize {
        dot.lines().filter(|l| l.contains("--")).count()
    }

    #[test]
    fn heawood_structure() {
        let g =
            mutual_incidence_graph(&trivial_design(7).unwrap(), &fixture("fano").unwrap()).unwrap();
        assert_eq!(g.vertex_count(), 14);
        assert_eq!(g.edge_count(), 21);
        assert!(g.degrees().iter().all(|&d| d == 3));
        assert_eq!(edge_lines(&export_dot(&g)), 21);
    }

    #[test]
    fn trivial_pair_is_a_matching() {
        let t = trivial_design(2).unwrap();
        let g = mutual_incidence_graph(&t, &t).unwrap();
        let dot = export_dot(&g);
        assert_eq!(
            dot,
            "graph mutual_incidence {\n  D1_B1;\n  D1_B2;\n  D2_B1;\n  D2_B2;\n  D1_B1 -- D2_B1;\n  D1_B2 -- D2_B2;\n}\n"
        );
    }

    #[test]
    fn example_one_edge_total() {
        let g =
            mutual_incidence_graph(&fixture("fano").unwrap(), &fixture("ex1_d2").unwrap()).unwrap();
        assert_eq!(g.edge_count(), 252);
        let deg = g.degrees();
        assert!(deg[..7].iter().all(|&d| d == 36));
        assert!(deg[7..].iter().all(|&d| d == 9));
    }

    #[test]
    fn merged_self() {
        let g = merged_self_graph(&fixture("fano").unwrap());
        assert_eq!(g.edge_count(), 21);
        assert_eq!(edge_lines(&export_dot(&g)), 21);
        assert!(g.edge_multiplicity.is_symmetric());
        assert!(merged_self_graph(&trivial_design(4).unwrap())
            .edge_multiplicity
            .is_zero());
        let ex3 = merged_self_graph(&fixture("ex3_d1").unwrap());
        assert!(ex3
            .edge_multiplicity
            .off_diagonal_values()
            .iter()
            .all(|x| *x >= 0.into() && *x <= 2.into()));
    }

    #[test]
    fn intersection_graphs() {
        let fano = fixture("fano").unwrap();
        let g = block_intersection_graph(&fano);
        assert_eq!(g.edge_count(), 21);
        let none = s_block_intersection_graph(&fano, &BTreeSet::from([0])).unwrap();
        assert_eq!(none.edge_count(), 0);
        assert!(block_intersection_graph(&trivial_design(5).unwrap()).edge_count() == 0);
        // T(6): 15 vertices of degree 8
        let t6 = block_intersection_graph(&complete_design(6, 2).unwrap());
        assert_eq!(t6.edge_count(), 15 * 8 / 2);
        assert_eq!(
            s_block_intersection_graph(&fano, &BTreeSet::new()).unwrap_err(),
            Error::EmptySizeSet
        );
    }
}
