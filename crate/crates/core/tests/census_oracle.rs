mod common;

use common::{brute_equivalent, naive_interior_census, verts};
use npinv_core::enumeration::enumerate_interior_polygons;

/// The census for small genera agrees with exhaustive subset search in a 7×7 box.
#[test]
fn census_matches_naive_generator() {
    for (g, expected) in (1..=6i64).zip([1, 1, 2, 4, 5, 6]) {
        let naive = naive_interior_census(g as usize, 7);
        assert_eq!(naive.len(), expected, "genus {g}: {naive:?}");
        let census = enumerate_interior_polygons(g).unwrap();
        assert_eq!(census.entries.len(), naive.len(), "genus {g}");
        for e in &census.entries {
            let v = verts(&e.interior);
            let hits = naive.iter().filter(|c| brute_equivalent(c, &v)).count();
            assert_eq!(hits, 1, "genus {g}: {v:?}");
        }
    }
}
