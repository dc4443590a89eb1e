//! SVG drawing of a tiling on the triangular lattice.

use std::fmt::Write;

use hexatile::regions::{LatticePoint, LozengeKind, Region, Tiling};

/// Pixels per unit edge.
pub const UNIT_PX: f64 = 40.0;
const MARGIN_PX: f64 = 20.0;
const SQRT3_2: f64 = 0.866_025_403_784_438_6;

fn embed(p: LatticePoint) -> (f64, f64) {
    let (a, b) = (p.0 as f64, p.1 as f64);
    ((a + b / 2.0) * UNIT_PX, -b * SQRT3_2 * UNIT_PX)
}

struct Frame {
    min_x: f64,
    min_y: f64,
    width: f64,
    height: f64,
}

impl Frame {
    fn around(points: impl Iterator<Item = LatticePoint>) -> Frame {
        let (mut lo_x, mut lo_y, mut hi_x, mut hi_y) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
        for (i, (x, y)) in points.map(embed).enumerate() {
            if i == 0 {
                (lo_x, lo_y, hi_x, hi_y) = (x, y, x, y);
            }
            lo_x = lo_x.min(x);
            lo_y = lo_y.min(y);
            hi_x = hi_x.max(x);
            hi_y = hi_y.max(y);
        }
        Frame {
            min_x: lo_x - MARGIN_PX,
            min_y: lo_y - MARGIN_PX,
            width: hi_x - lo_x + 2.0 * MARGIN_PX,
            height: hi_y - lo_y + 2.0 * MARGIN_PX,
        }
    }

    fn point(&self, p: LatticePoint) -> (f64, f64) {
        let (x, y) = embed(p);
        (x - self.min_x, y - self.min_y)
    }

    fn points_attr(&self, pts: &[LatticePoint]) -> String {
        pts.iter()
            .map(|&p| {
                let (x, y) = self.point(p);
                format!("{x:.3},{y:.3}")
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn fill(kind: LozengeKind) -> &'static str {
    match kind {
        LozengeKind::Horizontal => "#e8c170",
        LozengeKind::Rising => "#8fb8de",
        LozengeKind::Falling => "#c5d86d",
    }
}

/// Renders `tiling` of `region`: one polygon per lozenge, one per hole, and a
/// circle on every position whose weight is not 1.
pub fn render(region: &Region, tiling: &Tiling) -> String {
    let frame = Frame::around(region.cells().iter().flat_map(|c| c.vertices()));
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:.3}" height="{h:.3}" viewBox="0 0 {w:.3} {h:.3}">"#,
        w = frame.width,
        h = frame.height
    );
    for loz in tiling.lozenges() {
        let _ = writeln!(
            out,
            r##"  <polygon class="rhombus" points="{}" fill="{}" stroke="#333333" stroke-width="1"/>"##,
            frame.points_attr(&loz.outline()),
            fill(loz.kind())
        );
    }
    for hole in region.holes() {
        let _ = writeln!(
            out,
            r##"  <polygon class="hole" points="{}" fill="#ffffff" stroke="#333333" stroke-width="2"/>"##,
            frame.points_attr(hole)
        );
    }
    for pos in region.weights().keys() {
        let outline = pos.outline();
        let (mut cx, mut cy) = (0.0, 0.0);
        for p in outline {
            let (x, y) = frame.point(p);
            cx += x / 4.0;
            cy += y / 4.0;
        }
        let _ = writeln!(
            out,
            r##"  <circle class="weight-marker" cx="{cx:.3}" cy="{cy:.3}" r="{:.3}" fill="#c0392b"/>"##,
            UNIT_PX / 8.0
        );
    }
    out.push_str("</svg>\n");
    out
}
