use super::*;
use crate::repweights::{irrep_weights, union_weights};
use crate::QHalfspace;

fn v(c: &[i64]) -> QVec {
    QVec::from_i64s(c)
}

fn q(a: i64, b: i64) -> Rational {
    Rational::new(a.into(), b.into())
}

fn qv(c: &[(i64, i64)]) -> QVec {
    c.iter().map(|&(a, b)| q(a, b)).collect()
}

fn rs(s: &str) -> RootSystem {
    RootSystem::parse(s).unwrap()
}

fn hull(pts: &[&[i64]]) -> QPolyhedron {
    QPolyhedron::hull(pts.iter().map(|p| v(p)).collect()).unwrap()
}

fn cone(dim: usize, rays: &[&[i64]]) -> QPolyhedron {
    QPolyhedron::cone_from_rays(dim, rays.iter().map(|p| v(p)).collect()).unwrap()
}

fn hs(normal: &[i64], offset: i64) -> QHalfspace {
    QHalfspace::new(v(normal), q(offset, 1))
}

#[test]
fn torus_linear_cones() {
    let t2 = rs("T2");
    assert_eq!(
        linear_cone_torus(&t2, &[v(&[1, 0]), v(&[0, 1])]).unwrap(),
        cone(2, &[&[-1, 0], &[0, -1]])
    );
    assert_eq!(linear_cone_torus(&t2, &[]).unwrap(), cone(2, &[]));
    let line = linear_cone_torus(&t2, &[v(&[1, 0]), v(&[-1, 0])]).unwrap();
    assert!(!line.is_proper().unwrap());
    assert_eq!(line.lines(), &[v(&[1, 0])]);
}

#[test]
fn torus_projective_polytopes() {
    let t2 = rs("T2");
    assert_eq!(
        projective_polytope_torus(&t2, &[v(&[1, 0]), v(&[0, 1])]).unwrap(),
        hull(&[&[-1, 0], &[0, -1]])
    );
    assert_eq!(projective_polytope_torus(&t2, &[v(&[2, 3])]).unwrap(), hull(&[&[-2, -3]]));
    assert!(matches!(projective_polytope_torus(&t2, &[]), Err(Error::Empty(_))));
    // weights {0, λ} give the segment between −λ and 0
    let t1 = rs("T1");
    assert_eq!(
        projective_polytope_torus(&t1, &[v(&[0]), v(&[3])]).unwrap(),
        hull(&[&[-3], &[0]])
    );
}

#[test]
fn affine_cones() {
    let a2 = rs("A2");
    assert_eq!(affine_cone_from_hw(&a2, &[v(&[1, 0]), v(&[0, 1])]).unwrap(), a2.chamber());
    assert_eq!(affine_cone_from_hw(&a2, &[]).unwrap(), cone(2, &[]));
    assert!(matches!(
        affine_cone_from_hw(&a2, &[v(&[1, -1])]),
        Err(Error::NotDominant(_))
    ));
}

#[test]
fn peter_weyl_antidiagonal() {
    let kk = rs("A2xA2");
    let gens = [v(&[1, 0, 0, 1]), v(&[0, 1, 1, 0])];
    let anti = affine_cone_from_hw(&kk, &gens).unwrap();
    // {(μ, μ*) : μ dominant} as equalities and chamber inequalities
    let oracle = QPolyhedron::from_halfspaces(
        4,
        vec![hs(&[1, 0, 0, 0], 0), hs(&[0, 1, 0, 0], 0)],
        vec![hs(&[1, 0, 0, -1], 0), hs(&[0, 1, -1, 0], 0)],
    )
    .unwrap();
    assert_eq!(anti, oracle);
    assert!(star_invariance_check(&kk, &anti).unwrap());
}

#[test]
fn closures() {
    let a2 = rs("A2");
    let inf = gelfand_infinity_polytope(&a2).unwrap();
    assert_eq!(inf, hull(&[&[1, 0], &[0, 1]]));
    assert_eq!(
        projective_closure_polytope(&inf).unwrap(),
        hull(&[&[0, 0], &[1, 0], &[0, 1]])
    );
    assert_eq!(recover_cone(&inf).unwrap(), a2.chamber());

    let t1 = rs("T1");
    let seg = gelfand_infinity_polytope(&t1).unwrap();
    assert_eq!(projective_closure_polytope(&seg).unwrap(), seg);
    assert_eq!(recover_cone(&seg).unwrap(), QPolyhedron::universe(1));

    assert_eq!(projective_closure_polytope(&hull(&[&[2, 1]])).unwrap(), hull(&[&[0, 0], &[2, 1]]));
    assert!(matches!(
        projective_closure_polytope(&cone(2, &[&[1, 0]])),
        Err(Error::NotPolytope)
    ));
}

#[test]
fn gelfand_mixed_group() {
    let g = rs("A1xT1");
    assert!(gelfand_infinity_polytope(&g).unwrap_err().is_unsupported());
    let p = gelfand_closure_polytope(&g).unwrap();
    assert_eq!(p, hull(&[&[0, -1], &[0, 1], &[1, -1], &[1, 1]]));
}

#[test]
fn upper_bounds() {
    let a2 = rs("A2");
    assert_eq!(
        upper_bound_projective(&a2, &v(&[2, 1])).unwrap(),
        hull(&[&[0, 0], &[2, 0], &[1, 2], &[0, 2]])
    );
    assert_eq!(
        upper_bound_projective(&rs("G2"), &v(&[0, 1])).unwrap(),
        hull(&[&[0, 0], &[1, 0], &[0, 1]])
    );
    assert_eq!(
        upper_bound_projective(&a2, &v(&[2, 2])).unwrap(),
        naive_polytope(&a2, &[v(&[2, 2])]).unwrap()
    );
}

#[test]
fn a2_naive_region_has_trimmed_corner() {
    let a2 = rs("A2");
    let naive = naive_polytope(&a2, &[v(&[2, 1])]).unwrap();
    let mut expect = vec![v(&[0, 0]), v(&[2, 0]), v(&[1, 2]), qv(&[(0, 1), (5, 2)])];
    expect.sort();
    assert_eq!(naive.points(), expect.as_slice());
}

#[test]
fn lower_bounds() {
    let a2 = rs("A2");
    let ws = irrep_weights(&a2, &v(&[2, 2])).unwrap();
    assert_eq!(
        lower_bound_projective(&a2, &ws).unwrap(),
        upper_bound_projective(&a2, &v(&[2, 2])).unwrap()
    );

    let a3 = rs("A3");
    let ws = irrep_weights(&a3, &v(&[1, 0, 0])).unwrap();
    assert_eq!(lower_bound_projective(&a3, &ws).unwrap(), hull(&[&[0, 0, 1]]));

    let one = irrep_weights(&a2, &v(&[1, 0])).unwrap();
    let three = union_weights(&a2, &[one.clone(), one.clone(), one]).unwrap();
    assert_eq!(
        lower_bound_projective(&a2, &three).unwrap(),
        naive_polytope(&a2, &[v(&[1, 0])]).unwrap()
    );
}

#[test]
fn lower_bound_records_strategy() {
    let a2 = rs("A2");
    let small = lower_bound_search(&a2, &irrep_weights(&a2, &v(&[1, 1])).unwrap()).unwrap();
    assert_eq!(small.strategy, SearchStrategy::Exhaustive);
    let big = lower_bound_search(&a2, &irrep_weights(&a2, &v(&[3, 3])).unwrap()).unwrap();
    assert_eq!(big.strategy, SearchStrategy::Greedy);
    assert!(big.describe().starts_with("greedy"));
}

#[test]
fn projective_answers() {
    let a3 = rs("A3");
    let ans = momentum_polytope_projective(&a3, &[v(&[1, 1, 1])]).unwrap();
    let mut expect = vec![
        v(&[1, 1, 1]),
        v(&[0, 0, 0]),
        v(&[2, 0, 0]),
        v(&[0, 2, 0]),
        v(&[0, 0, 2]),
        qv(&[(4, 3), (1, 1), (0, 1)]),
        qv(&[(0, 1), (1, 1), (4, 3)]),
        qv(&[(1, 1), (0, 1), (5, 3)]),
        qv(&[(5, 3), (0, 1), (1, 1)]),
    ];
    expect.sort();
    assert_eq!(ans.exact.unwrap().points(), expect.as_slice());

    let a2 = rs("A2");
    let ans = momentum_polytope_projective(&a2, &[v(&[2, 1])]).unwrap();
    assert_eq!(ans.exact.unwrap(), hull(&[&[0, 0], &[2, 0], &[1, 2], &[0, 2]]));

    let ans = momentum_polytope_projective(&a2, &[v(&[2, 2])]).unwrap();
    assert_eq!(ans.exact.unwrap(), naive_polytope(&a2, &[v(&[2, 2])]).unwrap());

    assert_eq!(
        momentum_polytope_projective(&a2, &[v(&[0, 0])]).unwrap().exact.unwrap(),
        hull(&[&[0, 0]])
    );
    assert!(matches!(momentum_polytope_projective(&a2, &[]), Err(Error::Empty(_))));
    let half = qv(&[(1, 2), (0, 1)]);
    assert!(matches!(
        momentum_polytope_projective(&a2, &[half]),
        Err(Error::NotIntegral(_))
    ));
}

#[test]
fn repeated_summands_are_exact() {
    let a2 = rs("A2");
    let ans = momentum_polytope_projective(&a2, &vec![v(&[1, 0]); 3]).unwrap();
    assert!(ans.certificate.contains("copies"));
    assert_eq!(ans.exact.unwrap(), naive_polytope(&a2, &[v(&[1, 0])]).unwrap());
}

#[test]
fn bounds_only_answers_are_nested() {
    // B3 with a unit pairing and no listed exactness condition
    let b3 = rs("B3");
    let ans = momentum_polytope_projective(&b3, &[v(&[1, 1, 0])]).unwrap();
    assert!(ans.lower.is_subset_of(&ans.upper));
    if let Some(e) = &ans.exact {
        assert_eq!(e, &ans.lower);
        assert_eq!(e, &ans.upper);
    }
}

#[test]
fn star_lies_in_answer() {
    for (g, l) in [("A2", vec![2, 1]), ("B2", vec![1, 1]), ("G2", vec![1, 0]), ("A3", vec![0, 1, 0])] {
        let r = rs(g);
        let lam = v(&l);
        let ans = momentum_polytope_projective(&r, std::slice::from_ref(&lam)).unwrap();
        let p = ans.exact.unwrap_or(ans.upper);
        assert!(p.points().contains(&r.star(&lam).unwrap()), "{g}");
    }
}

#[test]
fn local_cones() {
    let t2 = rs("T2");
    let spec = LocalConeSpec::torus(v(&[1, 1]), vec![v(&[1, 0]), v(&[0, 1])]);
    let c = local_cone(&t2, &spec).unwrap();
    assert_eq!(
        c,
        QPolyhedron::from_generators(2, vec![v(&[1, 1])], vec![v(&[-1, 0]), v(&[0, -1])], vec![]).unwrap()
    );
    assert!(vertex_condition(&t2, &spec).unwrap());

    let point = LocalConeSpec::torus(v(&[3, -2]), vec![]);
    assert_eq!(local_cone(&t2, &point).unwrap(), hull(&[&[3, -2]]));

    let line = LocalConeSpec::torus(v(&[0, 0]), vec![v(&[1, 0]), v(&[-1, 0])]);
    assert!(!vertex_condition(&t2, &line).unwrap());
}

fn halfplane_spec(mu: QVec, w: i64) -> LocalConeSpec {
    LocalConeSpec {
        mu,
        slice_weights: vec![v(&[w])],
        isotropy_subtorus: vec![v(&[1, 0])],
        case: IsotropyCase::Subtorus,
    }
}

#[test]
fn subtorus_preimage() {
    let t2 = rs("T2");
    let spec = halfplane_spec(v(&[2, 5]), 1);
    let c = local_cone(&t2, &spec).unwrap();
    let oracle = QPolyhedron::from_halfspaces(2, vec![hs(&[-1, 0], -2)], vec![]).unwrap();
    assert_eq!(c, oracle);
    assert!(!vertex_condition(&t2, &spec).unwrap());

    // full-length slice weights are restricted first
    let mut full = spec.clone();
    full.slice_weights = vec![v(&[1, 7])];
    assert_eq!(local_cone(&t2, &full).unwrap(), oracle);

    let mut bad = spec.clone();
    bad.isotropy_subtorus = vec![v(&[1, 0]), v(&[2, 0])];
    assert_eq!(local_cone(&t2, &bad), Err(Error::DependentBasis));
    bad.isotropy_subtorus.clear();
    assert!(local_cone(&t2, &bad).is_err());
}

#[test]
fn assembling() {
    let t1 = rs("T1");
    let specs = [
        LocalConeSpec::torus(v(&[-1]), vec![v(&[-1])]),
        LocalConeSpec::torus(v(&[1]), vec![v(&[1])]),
    ];
    assert_eq!(assemble_polytope(&t1, &specs).unwrap(), hull(&[&[-1], &[1]]));
    assert_eq!(
        assemble_polytope(&t1, &specs[..1]).unwrap(),
        local_cone(&t1, &specs[0]).unwrap()
    );
    assert!(matches!(assemble_polytope(&t1, &[]), Err(Error::Empty(_))));

    let t2 = rs("T2");
    let strip = assemble_polytope(&t2, &[halfplane_spec(v(&[1, 0]), 1), halfplane_spec(v(&[-1, 0]), -1)]).unwrap();
    let oracle = QPolyhedron::from_halfspaces(2, vec![hs(&[-1, 0], -1), hs(&[1, 0], -1)], vec![]).unwrap();
    assert_eq!(strip, oracle);
    assert!(!strip.recession_cone().is_proper().unwrap());
}

#[test]
fn local_cone_domain_checks() {
    let a2 = rs("A2");
    let spec = LocalConeSpec::torus(v(&[-1, 0]), vec![]);
    assert!(matches!(local_cone(&a2, &spec), Err(Error::NotDominant(_))));
    let central = LocalConeSpec {
        mu: v(&[1, 0]),
        slice_weights: vec![v(&[1, 0])],
        isotropy_subtorus: vec![],
        case: IsotropyCase::CentralOrbit,
    };
    assert!(local_cone(&a2, &central).unwrap_err().is_unsupported());
    let abelian = LocalConeSpec { mu: v(&[1, 2]), ..central };
    assert_eq!(
        local_cone(&a2, &abelian).unwrap(),
        QPolyhedron::from_generators(2, vec![v(&[1, 2])], vec![v(&[-1, 0])], vec![]).unwrap()
    );
    assert!("nonsense".parse::<IsotropyCase>().unwrap_err().is_unsupported());
    assert_eq!("central-orbit".parse::<IsotropyCase>().unwrap(), IsotropyCase::CentralOrbit);
}

#[test]
fn reductions() {
    let t2 = rs("T2");
    let square = hull(&[&[0, 0], &[2, 0], &[0, 2], &[2, 2]]);
    assert_eq!(
        reduce(&t2, &square, &v(&[0, 1]), &[v(&[1, 0])]).unwrap(),
        hull(&[&[0], &[2]])
    );
    let basis = [v(&[1, 0]), v(&[0, 1])];
    assert_eq!(reduce(&t2, &square, &v(&[0, 0]), &basis).unwrap(), square);
    assert!(matches!(
        reduce(&rs("A2"), &square, &v(&[1, 0]), &basis),
        Err(Error::Domain(_))
    ));
}

#[test]
fn left_right_reduction_gives_semisimple_chamber() {
    let kk = rs("A2xT1xA2xT1");
    // the two central circles are collected at the end: (a1, a2, b1, b2, z, w)
    assert_eq!(kk.rank(), 6);
    let gens = [
        v(&[1, 0, 0, 1, 0, 0]),
        v(&[0, 1, 1, 0, 0, 0]),
        v(&[0, 0, 0, 0, 1, -1]),
        v(&[0, 0, 0, 0, -1, 1]),
    ];
    let anti = affine_cone_from_hw(&kk, &gens).unwrap();
    let basis = [v(&[1, 0, 0, 1, 0, 0]), v(&[0, 1, 1, 0, 0, 0])];
    let reduced = reduce(&kk, &anti, &QVec::zeros(6), &basis).unwrap();
    assert_eq!(reduced, rs("A2").chamber());
}

#[test]
fn cotangent_cases() {
    for g in ["A2", "B2", "G2"] {
        let r = rs(g);
        let ans = cotangent_homogeneous(&r, &[]).unwrap();
        assert_eq!(ans.exact.unwrap(), r.chamber(), "{g}");
    }
    for g in ["B2", "G2"] {
        let r = rs(g);
        for wall in [v(&[1, 0]), v(&[0, 1])] {
            let ans = cotangent_homogeneous(&r, &[wall]).unwrap();
            assert_eq!(ans.exact.unwrap(), r.chamber(), "{g}");
        }
    }
    let a3 = rs("A3");
    let ans = cotangent_homogeneous(&a3, &[v(&[1, 0, 0])]).unwrap();
    assert_eq!(ans.exact.unwrap(), cone(3, &[&[1, 0, 1]]));
    let ans = cotangent_homogeneous(&a3, &[v(&[0, 1, 0])]).unwrap();
    assert!(ans.exact.is_none());
    assert!(ans.lower.is_subset_of(&ans.upper));
    assert!(matches!(
        cotangent_homogeneous(&a3, &[v(&[-1, 0, 0])]),
        Err(Error::NotDominant(_))
    ));
}

#[test]
fn cotangent_with_center_stays_semisimple() {
    let r = rs("A2xT1");
    let ans = cotangent_homogeneous(&r, &[]).unwrap();
    assert_eq!(ans.exact.unwrap(), semisimple_chamber(&r));
}

#[test]
fn star_invariance() {
    let b2 = rs("B2");
    assert!(star_invariance_check(&b2, &hull(&[&[0, 0], &[1, 0], &[1, 3]])).unwrap());
    let a2 = rs("A2");
    assert!(!star_invariance_check(&a2, &hull(&[&[0, 0], &[1, 0]])).unwrap());
    assert!(star_invariance_check(&a2, &hull(&[&[0, 0], &[1, 1]])).unwrap());
}
