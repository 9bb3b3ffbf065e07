use ydhopf::algebra::is_hopf_iso;
use ydhopf::biproduct::*;
use ydhopf::exact::{fourth_roots, Cyclo, Mat};
use ydhopf::exact::subspace::fixed_space;
use ydhopf::yetterdrinfeld::build_family1;

#[test]
fn biproduct_ops_suite() {
    for zeta in fourth_roots() {
        let a = build_family1(&zeta).unwrap();
        let b = build_biproduct(&a).unwrap();

        // coinvariants: dim 8, equals A-image, equals fixed(psi2, psi3)
        let coinv = coinvariants(&b);
        assert_eq!(coinv.dim(), 8, "zeta {zeta}");
        assert_eq!(coinv, a_image(&b), "zeta {zeta}");
        let chis = reconstruct_chi(&b).unwrap();
        let psis = psi_ops(&b, &chis);
        assert_eq!(coinv, fixed_space(&psis[1..3]), "zeta {zeta}");

        // contains u, v; not r
        assert!(coinv.contains(&b.u()) && coinv.contains(&b.v()) && !coinv.contains(&b.r()));

        // quotient iso
        assert!(quotient_iso_check(&b, &a).unwrap(), "zeta {zeta}");

        // invariant subalgebra
        assert_eq!(invariant_subalgebra(&b, &chis), u_span(&b), "zeta {zeta}");

        // lattices
        let gl = grouplike_lattice(&b).unwrap();
        assert_eq!(gl.elements.len(), 8);
        assert_eq!(gl.group.order4_subgroups.len(), 7);
        assert_eq!(gl.central.len(), 2, "central group-likes {:?}", gl.central.len());
        let du = dual_lattice(&b).unwrap();
        assert_eq!(du.characters.len(), 8);
        assert_eq!(du.group.order4_subgroups.len(), 7);
        assert_eq!(du.gamma.len(), 7);
        println!("zeta {zeta}: ops ok");
    }

    // explicit iso for the sign pairs
    for zeta in [Cyclo::iota(), Cyclo::one()] {
        let b = build_biproduct(&build_family1(&zeta).unwrap()).unwrap();
        let bn = build_biproduct(&build_family1(&-&zeta).unwrap()).unwrap();
        let f = explicit_iso_to_negative(&b, &bn).unwrap();
        let (ok, why) = is_hopf_iso(&f, &b.hopf, &bn.hopf);
        assert!(ok, "zeta {zeta}: {:?}", why);
        let g = explicit_iso_to_negative(&bn, &b).unwrap();
        assert_eq!(g.matmul(&f), Mat::identity(32));
        assert_eq!(f.matmul(&g), Mat::identity(32));
        println!("zeta {zeta}: sign-pair iso ok");
    }
}
