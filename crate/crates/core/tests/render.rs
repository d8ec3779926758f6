use gridify_core::hausdorff::{construct_hausdorff, Q4Strategy};
use gridify_core::io::{parse_polygon, polygon_to_json, polygon_to_text};
use gridify_core::svg::render_svg;
use gridify_core::{CellSet, Point, Polygon};

fn fixture() -> Polygon {
    Polygon::new(
        [(0.4, 0.3), (4.6, 0.8), (3.7, 2.2), (5.1, 4.4), (1.2, 3.9)]
            .iter()
            .map(|&(x, y)| Point::new(x, y))
            .collect(),
    )
    .unwrap()
}

#[test]
fn svg_matches_golden_file() {
    let p = fixture();
    let q = construct_hausdorff(&p, Q4Strategy::Arbitrary).unwrap().result;
    let svg = render_svg(&p, &q);
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/golden/pentagon.svg");
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(path, &svg).unwrap();
    }
    assert_eq!(svg, std::fs::read_to_string(path).unwrap());
}

#[test]
fn io_round_trips() {
    let p = fixture();
    assert_eq!(parse_polygon(&polygon_to_json(&p)).unwrap(), p);
    assert_eq!(parse_polygon(&polygon_to_text(&p)).unwrap(), p);
    let q = construct_hausdorff(&p, Q4Strategy::Arbitrary).unwrap().result;
    assert_eq!(CellSet::from_json(&q.to_json()).unwrap(), q);
}
