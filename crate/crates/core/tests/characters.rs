use parkspace::characters::*;
use parkspace::partitions::{MultiPartition, Partition};
use parkspace::groups::{character_condition, group, main_condition};

fn valid_ks(bound: u64, pred: impl Fn(i64) -> bool) -> Vec<u64> {
    (1..=bound).filter(|&k| pred(k as i64)).collect()
}

#[test]
fn imprimitive_character_condition_matches_main_condition() {
    for m in 2..=6u64 {
        for p in (1..=m).filter(|p| m % p == 0) {
            for n in 2..=4u64 {
                if n == 2 && p == m {
                    continue;
                }
                let w = group(&format!("G({m},{p},{n})")).unwrap();
                let cond = main_condition(&w);
                let bound = 4 * cond.modulus;
                let got = valid_ks(bound, |k| {
                    gmpn_ungraded_decomposition(m as usize, p, n, k).unwrap().representation_valid
                });
                assert_eq!(got, cond.members_up_to(bound), "G({m},{p},{n})");
            }
        }
    }
}

#[test]
fn symmetric_character_condition_matches_main_condition() {
    for n in 2..=8u64 {
        let w = group(&format!("S{n}")).unwrap();
        let cond = main_condition(&w);
        let bound = 4 * cond.modulus;
        let got = valid_ks(bound, |k| sym_irr_decomposition(n, k as u64, false).unwrap().representation_valid);
        assert_eq!(got, cond.members_up_to(bound), "S{n}");
    }
}

#[test]
fn dihedral_character_condition() {
    for m in 2..=12u64 {
        let w = group(&format!("D{m}")).unwrap();
        let cond = character_condition(&w);
        let got = valid_ks(4 * m, |k| dihedral_condition_check(m, k).unwrap().0);
        assert_eq!(got, cond.members_up_to(4 * m), "D{m}");
    }
}

#[test]
fn restricted_multiplicities_are_natural_exactly_when_predicted() {
    for m in 2..=6u64 {
        for p in (1..=m).filter(|p| m % p == 0) {
            for n in [2u64, 3] {
                let w = group(&format!("G({m},{p},{n})")).unwrap();
                let cond = character_condition(&w);
                let orbits = shift_orbits(m as usize, p, n).unwrap();
                for k in 1..=4 * m as i64 {
                    let natural = orbits.iter().all(|o| {
                        let c = gmpn_restricted_multiplicity(o, k).unwrap();
                        c.is_integer() && c >= parkspace::exact::int(0)
                    });
                    assert_eq!(natural, cond.contains(k as u64), "G({m},{p},{n}) k={k}");
                }
            }
        }
    }
}

#[test]
fn restriction_of_trivial_orbit_is_catalan() {
    use parkspace::groups::catalan_at_one;
    for m in 2..=5u64 {
        for p in (1..=m).filter(|p| m % p == 0) {
            let w = group(&format!("G({m},{p},3)")).unwrap();
            let d = gmpn_ungraded_decomposition(m as usize, p, 3, 7).unwrap();
            let triv = MultiPartition::in_slot(m as usize, 0, Partition::row(3));
            let label = CharLabel::Orbit(ShiftOrbit::of(&triv, p).unwrap().representative);
            let first = d.get(&label).expect("trivial orbit");
            assert_eq!(first.as_rational().unwrap(), &catalan_at_one(&w, 7), "G({m},{p},3)");
        }
    }
}
