//! The plain (ungraded) Grothendieck group of a Leavitt path algebra:
//! the cokernel of `N^t - I` with the columns of sink vertices removed,
//! where `N` is the adjacency matrix.

use crate::graph::Graph;
use crate::matrix::{cokernel, k0_presentation_matrix, FinAbGroup};

/// Grothendieck group of the Leavitt path algebra of `g`.
pub fn k0_nongraded(g: &Graph) -> FinAbGroup {
    cokernel(&k0_presentation_matrix(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;

    fn k0_str(text: &str) -> alloc::string::String {
        alloc::format!("{}", k0_nongraded(&parse_graph(text).unwrap()))
    }

    #[test]
    fn rose_with_two_petals_is_trivial() {
        assert_eq!(k0_str("vertex w\nedge a w w\nedge b w w\n"), "0");
    }

    #[test]
    fn rose_with_four_petals_is_z_mod_3() {
        assert_eq!(
            k0_str("vertex w\nedge a w w\nedge b w w\nedge c w w\nedge d w w\n"),
            "Z/3"
        );
    }

    #[test]
    fn all_pairs_triangle() {
        assert_eq!(
            k0_str(
                "vertex a\nvertex b\nvertex c\n\
                 edge ab a b\nedge ba b a\nedge bc b c\nedge cb c b\nedge ac a c\nedge ca c a\n"
            ),
            "Z/2 \u{2295} Z/2"
        );
    }

    #[test]
    fn single_edge_to_sink_is_free_of_rank_one() {
        assert_eq!(k0_str("vertex a\nvertex b\nedge e a b\n"), "Z");
    }

    #[test]
    fn two_cycle_is_free_of_rank_one() {
        assert_eq!(k0_str("vertex u\nvertex v\nedge a u v\nedge b v u\n"), "Z");
    }

    #[test]
    fn single_loop_is_free_of_rank_one() {
        assert_eq!(k0_str("vertex u\nedge l u u\n"), "Z");
    }

    #[test]
    fn isolated_vertex_is_free_of_rank_one() {
        assert_eq!(k0_str("vertex s\n"), "Z");
    }
}
