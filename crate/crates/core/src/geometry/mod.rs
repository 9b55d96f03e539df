//! Exact Gram-matrix geometry over Q(sqrt 5): signature, ultraideal
//! vertices, orthogonal truncation and compactness of the truncated simplex.

mod compact;
mod gram;
mod qsqrt5;

pub use compact::{compactness_check, compactness_report, facet_subgraphs, orthogonal_closure, CompactnessReport, SubsetRank};
pub use gram::{
    cofactor_normals, det, gram_from_graph, rank, signature, truncation_extend, unit_vector, GramMatrix,
    Matrix, NormalVector, TruncationCheck, TruncationReport,
};
pub use qsqrt5::QSqrt5;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{gamma, gamma_star, CoxeterGraph, Label};

    fn g() -> GramMatrix {
        gram_from_graph(&gamma()).unwrap()
    }

    #[test]
    fn lorentzian_signature() {
        assert_eq!(signature(&g()).unwrap(), (4, 1));
        assert!(g().det().is_negative());
    }

    #[test]
    fn principal_minor_signs() {
        let gm = g();
        for skip in 0..5 {
            let idx: Vec<usize> = (0..5).filter(|&i| i != skip).collect();
            assert!(gm.principal(&idx).det().is_negative(), "order four minor {skip}");
            assert_eq!(signature(&gm.principal(&idx)).unwrap(), (3, 1));
        }
    }

    #[test]
    fn adjugate_identity() {
        let gm = g();
        let d = gm.det();
        for i in 0..5 {
            for j in 0..5 {
                let mut acc = QSqrt5::zero();
                for k in 0..5 {
                    acc = &acc + &(gm.get(i, k) * &gm.cofactor(j, k));
                }
                let expected = if i == j { d.clone() } else { QSqrt5::zero() };
                assert_eq!(acc, expected);
            }
        }
    }

    #[test]
    fn truncation_and_gamma_star() {
        let (gs, report) = truncation_extend(&g(), &gamma()).unwrap();
        assert_eq!(report.vertex_facet.len(), 5);
        assert_eq!(report.vertex_vertex.len(), 10);
        assert!(report.all_passed());
        assert!(gs.is_isomorphic(&gamma_star()));
        assert!(compactness_check(&g(), &gs));
    }

    #[test]
    fn compactness_details() {
        let (gs, _) = truncation_extend(&g(), &gamma()).unwrap();
        let r = compactness_report(&g(), &gs).unwrap();
        assert!(r.lanner.iter().all(|s| s.passed));
        assert_eq!(r.dotted.len(), 15);
        assert_eq!(r.dotted.iter().filter(|s| s.passed).count(), 10);
        assert_eq!((r.vertices, r.edges), (20, 40));
        assert!(r.edges_bounded);
    }

    #[test]
    fn rank_negative_control() {
        let k = 5;
        let rows: Vec<Vec<QSqrt5>> = (0..4).map(|i| unit_vector(k, i)).collect();
        assert!(rank(&rows) < 5);
        // dropping a dotted edge leaves an edge with a single endpoint
        let (gs, _) = truncation_extend(&g(), &gamma()).unwrap();
        let mut broken = CoxeterGraph::new(10);
        for (i, j, l) in gs.edges() {
            if (i, j) != (5, 6) {
                broken.set(i, j, l).unwrap();
            }
        }
        assert!(!compactness_check(&g(), &broken));
    }

    #[test]
    fn facets_are_lanner() {
        let f = facet_subgraphs(&gamma()).unwrap();
        assert_eq!(f.len(), 5);
        assert!(f.iter().all(|s| s.size() == 4));
    }

    #[test]
    fn unsupported_labels_rejected() {
        let mut h = CoxeterGraph::new(2);
        h.set(0, 1, Label::Finite(7)).unwrap();
        assert!(gram_from_graph(&h).is_err());
        h = CoxeterGraph::new(2);
        h.set(0, 1, Label::Infinity).unwrap();
        assert!(gram_from_graph(&h).is_err());
    }

    #[test]
    fn cosines_exact() {
        let c = QSqrt5::cos_pi_5();
        // 4c^2 - 2c - 1 = 0
        let four = QSqrt5::from_ints(4, 0);
        let two = QSqrt5::from_ints(2, 0);
        assert!((&(&(&four * &c) * &c) - &(&two * &c) - QSqrt5::one()).is_zero());
        assert!((c.to_f64() - (std::f64::consts::PI / 5.0).cos()).abs() < 1e-15);
    }
}
