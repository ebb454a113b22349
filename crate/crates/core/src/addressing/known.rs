use super::{Addressing, Biclique};
use crate::graph::{triangular_vertex, Graph};

/// A triangle `0 1 2` with vertex 3 joined to 0 and 2, and a 3-addressing.
pub fn four_vertex_example() -> (Graph, Addressing) {
    let g = Graph::new(4, [(0, 1), (1, 2), (2, 0), (0, 3), (2, 3)]).expect("valid edges");
    let a = Addressing::from_strs(&["aa0", "ab0", "b0b", "baa"]).expect("equal-length rows");
    (g, a)
}

/// Sides of a six-biclique partition of the distance multigraph of `T_5`,
/// as 2-subsets of `{1, ..., 5}` written `ij`.
const T5_SIX: [(&[u8], &[u8]); 6] = [
    (&[12, 13, 14, 15], &[23, 24, 25, 34, 35, 45]),
    (&[12, 25], &[13, 14, 34, 35, 45]),
    (&[23, 24], &[15, 25, 34, 35, 45]),
    (&[13, 23, 35], &[14, 24, 45]),
    (&[15], &[12, 13, 14, 34]),
    (&[34], &[25, 35, 45]),
];

/// The six-biclique partition of the distance multigraph of `T_5`, in the
/// vertex order of [`crate::graph::gen_triangular`].
pub fn triangular5_six_bicliques() -> Vec<Biclique> {
    let vertex = |ij: u8| triangular_vertex(5, (ij / 10 - 1) as usize, (ij % 10 - 1) as usize);
    T5_SIX
        .iter()
        .map(|(l, r)| Biclique::new(l.iter().map(|&p| vertex(p)).collect(), r.iter().map(|&p| vertex(p)).collect()).expect("disjoint sides"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::addressing::verify_biclique_partition;
    use crate::graph::gen_triangular;

    #[test]
    fn six_bicliques_partition_t5() {
        let h = gen_triangular(5).unwrap().distance_multigraph().unwrap();
        assert!(verify_biclique_partition(&h, &triangular5_six_bicliques()).unwrap().is_ok());
    }
}
