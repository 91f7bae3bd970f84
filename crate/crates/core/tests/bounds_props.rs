use dpcolor::bounds::{
    audit_graph, avg_degree_coefficient, format_decimal, min_edges, table1, BoundSource, Rendering,
    Trichotomy,
};
use dpcolor::multigraph::{make_family, Family, Multigraph};
use dpcolor::potential::{PotentialParams, Rational};

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

#[test]
fn dp_coefficient_is_k_minus_one_plus_reciprocal_lambda() {
    for k in 5..=100 {
        let lambda = PotentialParams::new(k).unwrap().lambda;
        assert_eq!(
            avg_degree_coefficient(BoundSource::DpPotential, k).unwrap(),
            Rational::from_integer(k as i64 - 1) + q(1, lambda)
        );
    }
}

#[test]
fn coefficient_orderings_for_k_up_to_100() {
    for k in 5..=100 {
        let dp = avg_degree_coefficient(BoundSource::DpPotential, k).unwrap();
        let ga = avg_degree_coefficient(BoundSource::Gallai, k).unwrap();
        let ky = avg_degree_coefficient(BoundSource::KostochkaYancey, k).unwrap();
        assert!(dp > ga, "k={k}");
        assert!(ky > dp, "k={k}");
    }
}

#[test]
fn edge_bound_is_half_coefficient_times_n_plus_offset() {
    for k in 5..=12 {
        let lambda = PotentialParams::new(k).unwrap().lambda;
        for n in 1..=30 {
            let expected = (Rational::from_integer(k as i64 - 1) + q(1, lambda)) * q(n as i64, 2)
                + q(1, lambda);
            assert_eq!(min_edges(BoundSource::DpPotential, n, k).unwrap(), expected);
        }
    }
}

#[test]
fn sources_reject_small_k() {
    assert!(avg_degree_coefficient(BoundSource::DpPotential, 4).is_err());
    assert!(avg_degree_coefficient(BoundSource::KostochkaStiebitz, 5).is_err());
    assert!(avg_degree_coefficient(BoundSource::Gallai, 3).is_err());
}

#[test]
fn decimal_rendering_modes() {
    assert_eq!(format_decimal(q(25, 6), 4, Rendering::Truncate), "4.1666");
    assert_eq!(
        format_decimal(q(25, 6), 4, Rendering::RoundHalfEven),
        "4.1667"
    );
    assert_eq!(format_decimal(q(9, 2), 4, Rendering::Truncate), "4.5000");
    assert_eq!(
        format_decimal(q(1, 20000), 4, Rendering::RoundHalfEven),
        "0.0000"
    );
    assert_eq!(
        format_decimal(q(3, 20000), 4, Rendering::RoundHalfEven),
        "0.0002"
    );
}

#[test]
fn table_layout() {
    let t = table1(&[5, 20]);
    let text = t.to_text(Rendering::Truncate);
    assert_eq!(text.lines().count(), 3);
    assert!(text
        .lines()
        .all(|l| l.len() == text.lines().next().unwrap().len()));
    let csv = t.to_csv(Rendering::Truncate);
    assert_eq!(csv.lines().next().unwrap(), "k,gallai,ky,rabern,dp");
    assert_eq!(csv.lines().nth(1).unwrap(), "5,4.0909,4.5000,4.1176,4.1666");
}

#[test]
fn trichotomy_cases() {
    let cases = [
        (
            make_family(&Family::CliqueMultiple { t: 5, q: 1 }).unwrap(),
            5,
            Trichotomy::Complete,
        ),
        (
            make_family(&Family::CliqueMultiple { t: 2, q: 4 }).unwrap(),
            5,
            Trichotomy::QuadrupleEdgeOrDoubleCycle,
        ),
        (
            make_family(&Family::CycleMultiple { n: 4, q: 2 }).unwrap(),
            5,
            Trichotomy::QuadrupleEdgeOrDoubleCycle,
        ),
        (
            make_family(&Family::CycleMultiple { n: 4, q: 2 }).unwrap(),
            6,
            Trichotomy::Neither,
        ),
        (
            make_family(&Family::CliqueMultiple { t: 6, q: 1 }).unwrap(),
            5,
            Trichotomy::EdgeThreshold,
        ),
        (
            Multigraph::simple(3, &[(0, 1), (1, 2)]).unwrap(),
            5,
            Trichotomy::Neither,
        ),
    ];
    for (g, k, expected) in cases {
        assert_eq!(audit_graph(&g, k).unwrap().case, expected, "{g:?} k={k}");
    }
}
