//! Randomized invariant checks.

mod common;

use proptest::prelude::*;

use charres::character::character_inner_product;
use charres::equivariant::{betti_characters_opts, molien_check};
use charres::field::{cyclotomic_field_7, FieldElement, FieldSpec};
use charres::groebner::buchberger;
use charres::ideal::Ideal;
use charres::parse::{element_parse, poly_parse};
use charres::resolution::resolve_quotient;
use charres::ring::RingContext;
use charres::{Monomial, Polynomial, Ring};

fn rational_field_element() -> impl Strategy<Value = (i64, i64)> {
    (-40i64..=40, 1i64..=12)
}

/// Element of Q(ζ7) from seven small rational coordinates.
fn cyclotomic(coords: &[(i64, i64)]) -> FieldElement {
    let kk = cyclotomic_field_7();
    let a = element_parse("a", &kk).unwrap();
    let mut power = kk.one();
    let mut out = kk.zero();
    for (n, d) in coords {
        let c = kk.from_rational(num::BigRational::new((*n).into(), (*d).into()));
        out = kk.add(&out, &kk.mul(&c, &power));
        power = kk.mul(&power, &a);
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cyclotomic_field_axioms(
        x in prop::collection::vec(rational_field_element(), 7),
        y in prop::collection::vec(rational_field_element(), 7),
        z in prop::collection::vec(rational_field_element(), 7),
    ) {
        let kk = cyclotomic_field_7();
        let (x, y, z) = (cyclotomic(&x), cyclotomic(&y), cyclotomic(&z));
        prop_assert_eq!(kk.add(&x, &y), kk.add(&y, &x));
        prop_assert_eq!(kk.mul(&x, &y), kk.mul(&y, &x));
        prop_assert_eq!(kk.mul(&kk.mul(&x, &y), &z), kk.mul(&x, &kk.mul(&y, &z)));
        prop_assert_eq!(
            kk.mul(&x, &kk.add(&y, &z)),
            kk.add(&kk.mul(&x, &y), &kk.mul(&x, &z))
        );
        if x != kk.zero() {
            prop_assert_eq!(kk.mul(&x, &kk.inv(&x).unwrap()), kk.one());
        }
    }
}

fn small_poly(ring: &Ring) -> impl Strategy<Value = Polynomial> {
    let ring = ring.clone();
    prop::collection::vec(
        ((-9i64..=9), prop::collection::vec(0u32..=3, ring.nvars())),
        0..5,
    )
    .prop_map(move |terms| {
        let field = ring.field.clone();
        let ts = terms
            .into_iter()
            .map(|(c, exps)| (field.from_i64(c), Monomial::from_exps(&exps)))
            .collect();
        Polynomial::from_terms(&ring, ts)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn polynomial_ring_axioms(
        (f, g, h) in {
            let r = RingContext::rational(&["x", "y", "z"]);
            (small_poly(&r), small_poly(&r), small_poly(&r))
        }
    ) {
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        prop_assert_eq!(f.add(&g).mul(&h), f.mul(&h).add(&g.mul(&h)));
    }

    #[test]
    fn render_parse_round_trip(
        f in {
            let r = RingContext::rational(&["x", "y", "z"]);
            small_poly(&r)
        }
    ) {
        let back = poly_parse(&f.render(), &f.ring).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn substitution_is_a_ring_homomorphism(
        (f, g, perm_seed) in {
            let r = RingContext::rational(&["x", "y", "z"]);
            (small_poly(&r), small_poly(&r), 0usize..6)
        }
    ) {
        let perms = [
            [0usize, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1],
        ];
        let sub = common::permutation_sub(&f.ring, &perms[perm_seed]);
        prop_assert_eq!(sub.apply(&f.mul(&g)), sub.apply(&f).mul(&sub.apply(&g)));
        prop_assert_eq!(sub.apply(&f.add(&g)), sub.apply(&f).add(&sub.apply(&g)));
    }
}

fn spoly(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let ring = &f.ring;
    let field = &ring.field;
    let (cf, mf) = f.lead().unwrap();
    let (cg, mg) = g.lead().unwrap();
    let lcm = mf.lcm(&mg);
    let a = Polynomial::monomial_term(ring, field.inv(&cf).unwrap(), lcm.div(&mf).unwrap());
    let b = Polynomial::monomial_term(ring, field.inv(&cg).unwrap(), lcm.div(&mg).unwrap());
    a.mul(f).sub(&b.mul(g))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn buchberger_output_is_a_reduced_groebner_basis(
        gens in {
            let r = RingContext::rational(&["x", "y"]);
            prop::collection::vec(small_poly(&r), 1..4)
        }
    ) {
        let r = gens[0].ring.clone();
        let gb = buchberger(&gens, &r, r.order, true).unwrap();
        for g in &gens {
            prop_assert!(gb.reduces_to_zero(g));
        }
        for a in 0..gb.elements.len() {
            for b in a + 1..gb.elements.len() {
                prop_assert!(gb.reduces_to_zero(&spoly(&gb.elements[a], &gb.elements[b])));
            }
        }
        let transition = gb.transition.as_ref().unwrap();
        for (k, p) in gb.elements.iter().enumerate() {
            let mut acc = Polynomial::zero(&r);
            for (i, c) in transition[k].iter().enumerate() {
                acc = acc.add(&c.mul(&gens[i]));
            }
            prop_assert_eq!(&acc, p);
        }
    }

    /// A monomial ideal closed under permuting exponents is S3-invariant, so
    /// the Molien identity must hold for the full resolution.
    #[test]
    fn molien_identity_on_symmetric_monomial_ideals(
        orbits in prop::collection::vec(
            prop::collection::vec(0u32..=3, 3).prop_filter("nonzero", |e| e.iter().any(|&x| x > 0)),
            1..3,
        )
    ) {
        let (r, _, action) = common::edge_ideal_s3();
        let field = r.field.clone();
        let mut gens = Vec::new();
        for e in &orbits {
            let perms = [
                [0usize, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1],
            ];
            for p in perms {
                let exps: Vec<u32> = p.iter().map(|&k| e[k]).collect();
                gens.push(Polynomial::monomial_term(&r, field.one(), Monomial::from_exps(&exps)));
            }
        }
        let ideal = Ideal::new(&r, gens);
        action.check_ideal_invariance(&ideal).unwrap();
        let complex = resolve_quotient(&r, &ideal.gens).unwrap();
        for (name, ok) in molien_check(&complex, &action, &ideal, None).unwrap() {
            prop_assert!(ok, "molien failed for {}", name);
        }
    }
}

/// Conjugate group elements always receive identical character values.
#[test]
fn characters_are_class_functions() {
    let r = RingContext::rational(&["x", "y", "z"]);
    let i = common::ideal(&r, &["x*y", "x*z", "y*z"]);
    let subs = vec![
        common::permutation_sub(&r, &[1, 0, 2]),
        common::permutation_sub(&r, &[0, 2, 1]),
        common::permutation_sub(&r, &[2, 1, 0]),
        common::permutation_sub(&r, &[1, 2, 0]),
        common::permutation_sub(&r, &[2, 0, 1]),
    ];
    let names = (0..5).map(|k| format!("e{k}")).collect();
    let action = charres::equivariant::GroupAction::new(&r, names, subs).unwrap();
    let complex = resolve_quotient(&r, &i.gens).unwrap();
    let table = betti_characters_opts(&complex, &action, false).unwrap();
    for row in &table.rows {
        for vals in row.values() {
            // three transpositions agree, both 3-cycles agree
            assert_eq!(vals[0], vals[1]);
            assert_eq!(vals[1], vals[2]);
            assert_eq!(vals[3], vals[4]);
        }
    }
}

/// The inner product is conjugate-symmetric over a cyclotomic field.
#[test]
fn inner_product_conjugate_symmetry() {
    let kk = cyclotomic_field_7();
    let x: Vec<FieldElement> = [(1, 1), (2, 3)]
        .iter()
        .map(|&(n, d)| cyclotomic(&[(n, d), (1, 2)]))
        .collect();
    let y: Vec<FieldElement> = [(0, 1), (5, 7)]
        .iter()
        .map(|&(n, d)| cyclotomic(&[(n, d), (0, 1), (3, 4)]))
        .collect();
    let sizes = [1u64, 1];
    let a = character_inner_product(&kk, &x, &y, &sizes, 2).unwrap();
    let b = character_inner_product(&kk, &y, &x, &sizes, 2).unwrap();
    assert_eq!(a, kk.conjugate(&b).unwrap());
}

/// Rational sanity anchor for the field strategies.
#[test]
fn rational_field_inverse() {
    let q = FieldSpec::rational();
    let x = q.from_rational(num::BigRational::new(22.into(), 7.into()));
    assert_eq!(q.mul(&x, &q.inv(&x).unwrap()), q.one());
}
