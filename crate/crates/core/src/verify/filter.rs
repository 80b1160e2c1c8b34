//! Necessary conditions on the symmetry group of a 27-vertex homology
//! 16-manifold that is not a homology sphere, as an executable filter on
//! permutation groups of degree 27.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::group::PermGroup;

pub const ALLOWED_ORDERS: [usize; 7] = [1, 2, 3, 4, 9, 11, 13];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    /// Element orders lie in {1,2,3,4,9,11,13}.
    ElementOrders,
    /// No subgroup `C₂×C₄` or `C₃×C₉`.
    NoC2xC4OrC3xC9,
    /// 2-subgroups have order ≤ 8 and 15/9/6 orbits for order 2/4/8.
    TwoSubgroups,
    /// 3-subgroups act freely.
    ThreeSubgroupsFree,
    /// Order-11 elements: two 11-cycles and five fixed points.
    Order11,
    /// A `D₁₁` subgroup has orbit lengths 11, 11, 2, 2, 1.
    Dihedral22,
    /// Order-13 elements: two 13-cycles and one fixed point.
    Order13,
}

impl Property {
    pub const ALL: [Property; 7] = [
        Property::ElementOrders,
        Property::NoC2xC4OrC3xC9,
        Property::TwoSubgroups,
        Property::ThreeSubgroupsFree,
        Property::Order11,
        Property::Dihedral22,
        Property::Order13,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Property::ElementOrders => "element orders in {1,2,3,4,9,11,13}",
            Property::NoC2xC4OrC3xC9 => "no C2xC4 or C3xC9 subgroup",
            Property::TwoSubgroups => "2-subgroups of order <= 8 with 15/9/6 orbits",
            Property::ThreeSubgroupsFree => "3-subgroups act freely",
            Property::Order11 => "order-11 elements: 11+11 and five fixed points",
            Property::Dihedral22 => "D11 subgroups: orbits 11,11,2,2,1",
            Property::Order13 => "order-13 elements: 13+13 and one fixed point",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PropertyOutcome {
    pub property: Property,
    pub holds: bool,
    /// Why it failed, or what was checked.
    pub evidence: String,
}

fn check(property: Property, holds: bool, evidence: String) -> PropertyOutcome {
    PropertyOutcome {
        property,
        holds,
        evidence,
    }
}

fn abelian_with_exponent(g: &PermGroup, order: usize, exponent: usize) -> Option<PermGroup> {
    g.subgroups_of_order(order)
        .expect("order divides |G|")
        .into_iter()
        .find(|h| h.is_abelian() && h.exponent() == exponent)
}

fn element_orders(spectrum: &BTreeMap<usize, usize>) -> PropertyOutcome {
    let bad: Vec<usize> = spectrum.keys().copied().filter(|o| !ALLOWED_ORDERS.contains(o)).collect();
    check(Property::ElementOrders, bad.is_empty(), format!("orders {:?}, disallowed {bad:?}", spectrum.keys().collect::<Vec<_>>()))
}

fn no_forbidden_abelian(g: &PermGroup, spectrum: &BTreeMap<usize, usize>) -> PropertyOutcome {
    let order = g.order();
    // C₂×C₄ needs an element of order 4, C₃×C₉ one of order 9.
    if order.is_multiple_of(8) && spectrum.contains_key(&4) {
        if let Some(h) = abelian_with_exponent(g, 8, 4) {
            return check(
                Property::NoC2xC4OrC3xC9,
                false,
                format!("C2xC4 generated by {}", gens_string(&h)),
            );
        }
    }
    if order.is_multiple_of(27) && spectrum.contains_key(&9) {
        if let Some(h) = abelian_with_exponent(g, 27, 9) {
            return check(
                Property::NoC2xC4OrC3xC9,
                false,
                format!("C3xC9 generated by {}", gens_string(&h)),
            );
        }
    }
    check(Property::NoC2xC4OrC3xC9, true, "abelian subgroups of order 8 and 27 inspected".into())
}

fn two_subgroups(g: &PermGroup) -> PropertyOutcome {
    let subs = g.p_subgroups(2);
    for h in &subs {
        let orbits = h.orbits().count();
        let ok = match h.order() {
            1 => true,
            2 => orbits == 15,
            4 => orbits == 9,
            8 => orbits == 6,
            _ => false,
        };
        if !ok {
            return check(
                Property::TwoSubgroups,
                false,
                format!("2-subgroup of order {} with {orbits} orbits", h.order()),
            );
        }
    }
    check(Property::TwoSubgroups, true, format!("{} 2-subgroups", subs.len()))
}

fn three_subgroups_free(g: &PermGroup) -> PropertyOutcome {
    // A 3-group acts freely iff each non-identity element is fixed-point-free.
    for e in g.elements() {
        let o = e.order();
        if o > 1 && is_power_of(o, 3) && !e.fixed_points().is_empty() {
            return check(
                Property::ThreeSubgroupsFree,
                false,
                format!("{} of order {o} fixes {}", e.to_cycle_string(), e.fixed_points()),
            );
        }
    }
    check(Property::ThreeSubgroupsFree, true, "3-elements are fixed-point-free".into())
}

fn cycle_shape(g: &PermGroup, property: Property, order: usize, shape: &[(usize, usize)]) -> PropertyOutcome {
    let want: BTreeMap<usize, usize> = shape.iter().copied().collect();
    let mut seen = 0;
    for e in g.elements().iter().filter(|e| e.order() == order) {
        seen += 1;
        if e.cycle_type() != want {
            return check(property, false, format!("{} has cycle type {:?}", e.to_cycle_string(), e.cycle_type()));
        }
    }
    check(property, true, format!("{seen} elements of order {order}"))
}

fn dihedral_22(g: &PermGroup) -> PropertyOutcome {
    if !g.order().is_multiple_of(22) {
        return check(Property::Dihedral22, true, "no subgroup of order 22".into());
    }
    // D₁₁ is the only non-abelian group of order 22.
    let subs = g.subgroups_of_order(22).expect("22 divides |G|");
    let dihedral: Vec<&PermGroup> = subs.iter().filter(|h| !h.is_abelian()).collect();
    for h in &dihedral {
        let lengths = h.orbits().lengths();
        if lengths != [11, 11, 2, 2, 1] {
            return check(Property::Dihedral22, false, format!("D11 with orbit lengths {lengths:?}"));
        }
    }
    check(Property::Dihedral22, true, format!("{} D11 subgroups", dihedral.len()))
}

fn is_power_of(mut x: usize, p: usize) -> bool {
    while x.is_multiple_of(p) {
        x /= p;
    }
    x == 1
}

fn gens_string(h: &PermGroup) -> String {
    h.generators().iter().map(|g| g.to_cycle_string()).collect::<Vec<_>>().join(", ")
}

/// Evaluates all seven properties.
pub fn group_filter(g: &PermGroup) -> Vec<PropertyOutcome> {
    let spectrum = g.element_order_multiset();
    vec![
        element_orders(&spectrum),
        no_forbidden_abelian(g, &spectrum),
        two_subgroups(g),
        three_subgroups_free(g),
        cycle_shape(g, Property::Order11, 11, &[(1, 5), (11, 2)]),
        dihedral_22(g),
        cycle_shape(g, Property::Order13, 13, &[(1, 1), (13, 2)]),
    ]
}

pub fn passes_filter(g: &PermGroup) -> bool {
    group_filter(g).iter().all(|o| o.holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn on27(cycles: &str) -> Permutation {
        Permutation::parse_cycles(27, cycles).unwrap()
    }

    #[test]
    fn planted_c6_fails_element_orders_only_there() {
        let g = PermGroup::generate(27, vec![on27("(1 2 3 4 5 6)")]).unwrap();
        let out = group_filter(&g);
        assert!(!out[0].holds);
    }

    #[test]
    fn c2_to_the_fourth_fails_two_subgroups() {
        let gens = vec![
            on27("(1 2)(3 4)(5 6)(7 8)(9 10)(11 12)(13 14)(15 16)"),
            on27("(1 3)(2 4)(5 7)(6 8)(9 11)(10 12)(13 15)(14 16)"),
            on27("(1 5)(2 6)(3 7)(4 8)(9 13)(10 14)(11 15)(12 16)"),
            on27("(1 9)(2 10)(3 11)(4 12)(5 13)(6 14)(7 15)(8 16)"),
        ];
        let g = PermGroup::generate(27, gens).unwrap();
        assert_eq!(g.order(), 16);
        let out = group_filter(&g);
        assert!(out[0].holds);
        assert!(!out[2].holds);
    }

    #[test]
    fn c2_x_c4_is_found() {
        // C₄ on 1..4 twice over plus an independent involution, all free
        // enough to isolate the abelian check.
        let gens = vec![on27("(1 2 3 4)(5 6 7 8)"), on27("(9 10)(11 12)")];
        let g = PermGroup::generate(27, gens).unwrap();
        assert!(!group_filter(&g)[1].holds);
    }

    #[test]
    fn order_11_shape() {
        let good = PermGroup::generate(27, vec![on27("(1 2 3 4 5 6 7 8 9 10 11)(12 13 14 15 16 17 18 19 20 21 22)")]).unwrap();
        assert!(group_filter(&good)[4].holds);
        let bad = PermGroup::generate(27, vec![on27("(1 2 3 4 5 6 7 8 9 10 11)")]).unwrap();
        assert!(!group_filter(&bad)[4].holds);
    }
}
