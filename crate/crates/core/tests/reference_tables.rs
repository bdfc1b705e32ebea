mod common;

use spherical_zeta::zeta::{emit_factored, full_edge_zeta, Format};
use spherical_zeta::Family;

fn luo(family: Family, rank: usize) {
    let (_, _, rows) = common::LUO_TABLES.iter().find(|t| t.0 == family && t.1 == rank).unwrap();
    common::check_luo(family, rank, rows).unwrap();
}

#[test]
fn luo_a5() {
    luo(Family::A, 5);
}

#[test]
fn luo_c5() {
    luo(Family::C, 5);
}

#[test]
fn luo_d5() {
    luo(Family::D, 5);
}

#[test]
fn luo_g2_f4() {
    luo(Family::G, 2);
    luo(Family::F, 4);
}

#[test]
fn luo_e6_e7_e8() {
    luo(Family::E, 6);
    luo(Family::E, 7);
    luo(Family::E, 8);
}

#[test]
fn c2_golden_text() {
    let f = full_edge_zeta(Family::C, 2).unwrap();
    assert_eq!(emit_factored(Family::C, 2, &f, Format::Text), include_str!("golden/c2.txt"));
}

#[test]
fn c3_golden_text() {
    let f = full_edge_zeta(Family::C, 3).unwrap();
    assert_eq!(emit_factored(Family::C, 3, &f, Format::Text), include_str!("golden/c3.txt"));
}

#[test]
fn c2_matches_published_factors() {
    let f = full_edge_zeta(Family::C, 2).unwrap();
    assert_eq!(f.len(), 1);
    assert_eq!((f[0].c, f[0].m, f[0].d), (2, 4, 4));
    common::check_factor(&f[0], &common::c2_table()).unwrap();
}

#[test]
fn c3_matches_published_factors() {
    let f = full_edge_zeta(Family::C, 3).unwrap();
    assert_eq!(f.len(), 2);
    let orbit = f.iter().find(|x| x.orbit.contains((1, 3))).unwrap();
    assert_eq!((orbit.c, orbit.m, orbit.d), (4, 4, 2));
    common::check_factor(orbit, &common::c3_table()).unwrap();
}

#[test]
fn b_is_read_as_c() {
    assert_eq!(full_edge_zeta(Family::B, 3).unwrap(), full_edge_zeta(Family::C, 3).unwrap());
}
