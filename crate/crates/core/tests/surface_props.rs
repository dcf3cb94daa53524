use arcstab::surface::{realizable_perms, ArcClass, Side, SurfaceType};
use arcstab::Perm;

fn arc(text: &str, side: Side) -> ArcClass {
    ArcClass::new(Perm::parse(text).unwrap(), side)
}

fn classes(max_p: usize) -> impl Iterator<Item = ArcClass> {
    (1..=max_p).flat_map(|p| {
        Perm::all(p).flat_map(|sigma| Side::BOTH.map(|side| ArcClass::new(sigma.clone(), side)))
    })
}

#[test]
fn cut_surface_euler_characteristic() {
    let mut checked = 0;
    for a in classes(7) {
        for g in 0..=6 {
            for r in a.side.index()..=5 {
                let ambient = SurfaceType::new(g, r);
                if let Ok(cut) = a.cut_surface(ambient) {
                    assert_eq!(cut.euler_char(), ambient.euler_char() + a.degree() as i64);
                    checked += 1;
                } else {
                    assert!(!a.realizable(g));
                }
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn neighbourhood_euler_characteristic() {
    for a in classes(7) {
        let s = i64::from(a.simplex_genus());
        let b = a.boundary_of_neighborhood() as i64;
        assert_eq!(2 - 2 * s - b, -(a.degree() as i64), "{a:?}");
    }
}

#[test]
fn faces_lose_at_most_one_genus() {
    for a in classes(7).filter(|a| a.degree() >= 2) {
        let s = a.simplex_genus();
        for j in 0..a.degree() {
            let f = ArcClass::new(a.perm.face(j).unwrap(), a.side).simplex_genus();
            assert!(f == s || f + 1 == s, "{a:?} face {j}");
        }
    }
}

#[test]
fn zero_genus_classification() {
    for a in classes(7) {
        let zero = a.simplex_genus() == 0;
        let expected = match a.side {
            Side::One => a.perm.is_identity(),
            Side::Two => a.perm.is_rotation_power(),
        };
        assert_eq!(zero, expected, "{a:?}");
    }
}

#[test]
fn realizability_is_face_closed() {
    for g in 0..=6 {
        for side in Side::BOTH {
            for p in 2..=7 {
                for sigma in realizable_perms(p, side, g) {
                    for j in 0..p {
                        let f = ArcClass::new(sigma.face(j).unwrap(), side);
                        assert!(f.realizable(g), "{sigma} face {j} g={g} side={side}");
                    }
                }
            }
        }
    }
}

#[test]
fn full_symmetric_group_in_the_bijective_range() {
    for g in 0..=6u32 {
        for side in Side::BOTH {
            for p in 1..=7usize {
                if p + 1 <= (g + side.index()) as usize {
                    assert_eq!(realizable_perms(p, side, g).len(), (1..=p).product::<usize>());
                }
            }
        }
    }
}

#[test]
fn stabilizer_tables() {
    for g in 0..=8u32 {
        for r in 0..=6u32 {
            let s01 = SurfaceType::new(g, r + 1);
            if g >= 2 && r >= 1 {
                let expect = [
                    ("1,0", g - 1, r + 1),
                    ("0,1", g - 1, r + 1),
                    ("0,2,1", g - 1, r),
                    ("1,2,0", g - 2, r + 2),
                ];
                for (text, eg, er) in expect {
                    assert_eq!(
                        arc(text, Side::Two).stabilizer_label(s01).unwrap(),
                        SurfaceType::new(eg, er),
                        "{text} in {s01}"
                    );
                }
            }
            if g >= 2 && r >= 2 {
                let s1m1 = SurfaceType::new(g + 1, r - 1);
                let expect = [
                    ("1,0", g, r - 1),
                    ("0,1", g - 1, r + 1),
                    ("0,2,1", g - 1, r),
                    ("1,2,0", g - 1, r),
                    ("0,1,2", g - 2, r + 2),
                ];
                for (text, eg, er) in expect {
                    assert_eq!(
                        arc(text, Side::One).stabilizer_label(s1m1).unwrap(),
                        SurfaceType::new(eg, er),
                        "{text} in {s1m1}"
                    );
                }
            }
        }
    }
}

#[test]
fn general_stabilizer_formula() {
    // label Γ_{g-p+s+1, r+p-2s-1} of a side-2 class in F_{g,r+1}
    for g in 2..=6u32 {
        for r in 1..=4u32 {
            let ambient = SurfaceType::new(g, r + 1);
            for p in 1..=5usize {
                for sigma in realizable_perms(p, Side::Two, g) {
                    let a = ArcClass::new(sigma, Side::Two);
                    let s = i64::from(a.simplex_genus());
                    let (g, r, p) = (i64::from(g), i64::from(r), p as i64);
                    let label = a.stabilizer_label(ambient).unwrap();
                    assert_eq!(
                        (i64::from(label.g), i64::from(label.r)),
                        (g - p + s + 1, r + p - 2 * s - 1)
                    );
                }
            }
        }
    }
}

#[test]
fn inline_anchors() {
    let f = SurfaceType::new(5, 3);
    let a = arc("1,2,0", Side::Two);
    assert_eq!(a.simplex_genus(), 0);
    assert_eq!(a.boundary_of_neighborhood(), 5);
    assert_eq!(a.cut_surface(f).unwrap(), SurfaceType::new(3, 4));
}
