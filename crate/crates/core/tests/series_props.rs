use crystal_identities::series::{
    pochhammer_expand, ColourSet, IntegerSeries, PochhammerFactor, PochhammerProduct, Variable,
};
use proptest::prelude::*;

const ORDER: usize = 12;

fn series() -> impl Strategy<Value = IntegerSeries> {
    prop::collection::vec(-20i64..20, 1..=ORDER + 1).prop_map(|c| IntegerSeries::from_integers(Variable::Q, &c, ORDER))
}

fn unit_series() -> impl Strategy<Value = IntegerSeries> {
    (prop::bool::ANY, prop::collection::vec(-9i64..9, 0..=ORDER)).prop_map(|(neg, tail)| {
        let mut c = vec![if neg { -1 } else { 1 }];
        c.extend(tail);
        IntegerSeries::from_integers(Variable::Q, &c, ORDER)
    })
}

fn factor() -> impl Strategy<Value = PochhammerFactor> {
    (1u32..6, 1u32..6, -2i32..=2, prop::bool::ANY).prop_map(|(a, n, p, neg)| {
        let f = PochhammerFactor::new(a, n, if p == 0 { 1 } else { p }).unwrap();
        if neg {
            f.negated()
        } else {
            f
        }
    })
}

proptest! {
    #[test]
    fn ring_laws(a in series(), b in series(), c in series()) {
        prop_assert_eq!(a.multiply(&b).unwrap(), b.multiply(&a).unwrap());
        prop_assert_eq!(a.multiply(&b).unwrap().multiply(&c).unwrap(), a.multiply(&b.multiply(&c).unwrap()).unwrap());
        prop_assert_eq!(
            a.multiply(&b.add(&c).unwrap()).unwrap(),
            a.multiply(&b).unwrap().add(&a.multiply(&c).unwrap()).unwrap()
        );
        prop_assert!(a.sub(&a).unwrap().is_zero());
    }

    #[test]
    fn units_invert(u in unit_series()) {
        let one = IntegerSeries::one(Variable::Q, &(), ORDER);
        prop_assert_eq!(u.multiply(&u.invert().unwrap()).unwrap(), one);
    }

    #[test]
    fn shifted_addition_matches_monomial_product(a in series(), b in series(), shift in 0usize..=ORDER, k in -5i64..5) {
        let mut lhs = a.clone();
        lhs.add_shifted(&b, shift, &k.into()).unwrap();
        let mono = IntegerSeries::monomial(Variable::Q, k.into(), shift, ORDER);
        prop_assert_eq!(lhs, a.add(&b.multiply(&mono).unwrap()).unwrap());
    }

    #[test]
    fn pochhammer_products_multiply(fs in prop::collection::vec(factor(), 1..5)) {
        let whole = pochhammer_expand(&fs, ORDER).unwrap();
        let mut piecewise = IntegerSeries::one(Variable::Q, &(), ORDER);
        for f in &fs {
            piecewise = piecewise.multiply(&pochhammer_expand(std::slice::from_ref(f), ORDER).unwrap()).unwrap();
        }
        prop_assert_eq!(&whole, &piecewise);
        let product = PochhammerProduct::from_factors(&fs);
        prop_assert_eq!(product.collect().expand(ORDER).unwrap(), whole.clone());
        prop_assert!(product.multiply(&product.inverse()).collect().is_one());
        prop_assert_eq!(product.inverse().expand(ORDER).unwrap(), whole.invert().unwrap());
    }

    #[test]
    fn truncation_commutes_with_products(a in series(), b in series(), m in 0usize..=ORDER) {
        prop_assert_eq!(a.multiply(&b).unwrap().truncate(m), a.truncate(m).multiply(&b.truncate(m)).unwrap());
    }

    #[test]
    fn render_lines_has_one_row_per_degree(a in series()) {
        let text = a.render_lines();
        prop_assert_eq!(text.lines().count(), ORDER + 1);
        for (d, line) in text.lines().enumerate() {
            let (degree, coefficient) = line.split_once('\t').unwrap();
            prop_assert_eq!(degree.parse::<usize>().unwrap(), d);
            prop_assert_eq!(coefficient, a.coefficients()[d].to_string());
        }
    }
}

#[test]
fn coloured_embedding_forgets_back() {
    let colours = ColourSet::letters(3);
    let a = IntegerSeries::from_integers(Variable::Q, &[1, 2, -3, 4], 3);
    assert_eq!(a.embed(&colours).forget_colours(), a);
}

#[test]
fn mismatched_truncations_are_rejected() {
    let a = IntegerSeries::from_integers(Variable::Q, &[1, 1], 3);
    let b = IntegerSeries::from_integers(Variable::Q, &[1, 1], 4);
    let t = IntegerSeries::from_integers(Variable::T, &[1, 1], 3);
    assert_eq!(
        a.add(&b).unwrap(),
        IntegerSeries::from_integers(Variable::Q, &[2, 2], 3)
    );
    assert!(a.multiply(&t).is_err());
}
