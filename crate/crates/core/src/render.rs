//! Standalone SVG output for a [`Layout`].

use std::fmt::Write as _;

use serde::Serialize;

use crate::layout::{color_of, fixed, Layout};

const LEGEND_HEIGHT: f64 = 64.0;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RenderOptions {
    /// Width and height of the drawing area in pixels.
    pub canvas: u32,
    pub background: String,
    pub edge_opacity: f64,
    pub edge_width: f64,
    pub legend: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            canvas: 800,
            background: "#ffffff".to_string(),
            edge_opacity: 0.4,
            edge_width: 0.5,
            legend: true,
        }
    }
}

fn escape(value: &str) -> String {
    value
        .replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

fn px(value: f64) -> String {
    fixed(value, 2)
}

/// Maps layout coordinates onto the canvas, fitting the vertex bounding box
/// with a 5% margin on each side and flipping the y axis.
struct Viewport {
    center: (f64, f64),
    scale: f64,
    half: f64,
}

impl Viewport {
    fn fit(layout: &Layout, canvas: f64) -> Viewport {
        let (mut min_x, mut min_y) = (f64::INFINITY, f64::INFINITY);
        let (mut max_x, mut max_y) = (f64::NEG_INFINITY, f64::NEG_INFINITY);
        for v in &layout.vertices {
            min_x = min_x.min(v.x);
            max_x = max_x.max(v.x);
            min_y = min_y.min(v.y);
            max_y = max_y.max(v.y);
        }
        if layout.vertices.is_empty() {
            (min_x, max_x, min_y, max_y) = (0.0, 0.0, 0.0, 0.0);
        }
        let span = (max_x - min_x).max(max_y - min_y);
        let span = if span > 0.0 { span } else { 1.0 };
        Viewport {
            center: ((min_x + max_x) / 2.0, (min_y + max_y) / 2.0),
            scale: canvas / (span * 1.1),
            half: canvas / 2.0,
        }
    }

    fn map(&self, x: f64, y: f64) -> (f64, f64) {
        (
            self.half + (x - self.center.0) * self.scale,
            self.half - (y - self.center.1) * self.scale,
        )
    }
}

/// Renders `layout` as an SVG 1.1 document.
///
/// Sampled edges are drawn first, each as two half segments colored by the
/// endpoint they touch. Vertices follow in ascending coreness so the highest
/// shells end up on top.
pub fn render_svg(layout: &Layout, opts: &RenderOptions) -> String {
    let canvas = opts.canvas.max(1) as f64;
    let height = if opts.legend {
        canvas + LEGEND_HEIGHT
    } else {
        canvas
    };
    let view = Viewport::fit(layout, canvas);
    let points: Vec<(f64, f64)> = layout.vertices.iter().map(|v| view.map(v.x, v.y)).collect();

    let mut svg = String::new();
    let w = |svg: &mut String, s: std::fmt::Arguments| svg.write_fmt(s).expect("writing to String");
    w(
        &mut svg,
        format_args!("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"),
    );
    w(
        &mut svg,
        format_args!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\">\n",
            px(canvas),
            px(height)
        ),
    );
    w(
        &mut svg,
        format_args!(
            "<rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"{}\"/>\n",
            px(canvas),
            px(height),
            escape(&opts.background)
        ),
    );

    w(
        &mut svg,
        format_args!(
            "<g id=\"edges\" stroke-width=\"{}\" stroke-opacity=\"{}\">\n",
            px(opts.edge_width),
            fixed(opts.edge_opacity, 3)
        ),
    );
    for &(a, b) in &layout.edges {
        let (pa, pb) = (points[a], points[b]);
        let mid = ((pa.0 + pb.0) / 2.0, (pa.1 + pb.1) / 2.0);
        for (end, vertex) in [(pa, a), (pb, b)] {
            w(
                &mut svg,
                format_args!(
                    "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\"/>\n",
                    px(end.0),
                    px(end.1),
                    px(mid.0),
                    px(mid.1),
                    layout.vertices[vertex].color.hex()
                ),
            );
        }
    }
    w(&mut svg, format_args!("</g>\n"));

    let mut order: Vec<usize> = (0..layout.vertices.len()).collect();
    order.sort_by_key(|&v| (layout.vertices[v].coreness, v));
    w(&mut svg, format_args!("<g id=\"vertices\">\n"));
    for v in order {
        let p = points[v];
        let vertex = &layout.vertices[v];
        w(
            &mut svg,
            format_args!(
                "<circle class=\"c{}\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{}\"/>\n",
                vertex.coreness,
                px(p.0),
                px(p.1),
                px(vertex.size),
                vertex.color.hex()
            ),
        );
    }
    w(&mut svg, format_args!("</g>\n"));

    if opts.legend {
        svg.push_str(&render_legend(
            layout.c_min,
            layout.c_max,
            layout.d_min,
            layout.d_max,
            canvas,
            canvas,
        ));
    }
    svg.push_str("</svg>\n");
    svg
}

/// Legend strip placed at `top`: one color swatch per coreness value from
/// `c_min` to `c_max`, and a wedge showing the vertex size ramp from the
/// minimum to the maximum degree.
pub fn render_legend(
    c_min: u32,
    c_max: u32,
    d_min: usize,
    d_max: usize,
    top: f64,
    width: f64,
) -> String {
    let mut out = String::new();
    let mut w = |s: std::fmt::Arguments| out.write_fmt(s).expect("writing to String");
    w(format_args!(
        "<g id=\"legend\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#000000\">\n"
    ));

    let bar_left = 10.0;
    let bar_width = width * 0.55 - bar_left;
    let swatches = (c_max - c_min + 1) as f64;
    let swatch_width = bar_width / swatches;
    let bar_top = top + 12.0;
    w(format_args!("<g id=\"color-scale\">\n"));
    for (i, c) in (c_min..=c_max).enumerate() {
        w(format_args!(
            "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"14.00\" fill=\"{}\"/>\n",
            px(bar_left + i as f64 * swatch_width),
            px(bar_top),
            px(swatch_width),
            color_of(c, c_min, c_max).hex()
        ));
    }
    w(format_args!("</g>\n"));
    w(format_args!(
        "<text x=\"{}\" y=\"{}\">coreness {}</text>\n",
        px(bar_left),
        px(bar_top + 30.0),
        c_min
    ));
    w(format_args!(
        "<text x=\"{}\" y=\"{}\" text-anchor=\"end\">{}</text>\n",
        px(bar_left + bar_width),
        px(bar_top + 30.0),
        c_max
    ));

    let ramp_left = width * 0.62;
    let ramp_right = width - 10.0;
    let mid = bar_top + 7.0;
    w(format_args!(
        "<polygon id=\"size-scale\" points=\"{},{} {},{} {},{}\" fill=\"#808080\"/>\n",
        px(ramp_left),
        px(mid),
        px(ramp_right),
        px(mid - 7.0),
        px(ramp_right),
        px(mid + 7.0)
    ));
    w(format_args!(
        "<text x=\"{}\" y=\"{}\">degree {}</text>\n",
        px(ramp_left),
        px(bar_top + 30.0),
        d_min
    ));
    w(format_args!(
        "<text x=\"{}\" y=\"{}\" text-anchor=\"end\">{}</text>\n",
        px(ramp_right),
        px(bar_top + 30.0),
        d_max
    ));
    w(format_args!("</g>\n"));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::layout::{NodePlacement, Rgb, VertexPlacement};

    fn vertex(x: f64, y: f64, coreness: u32, color: Rgb) -> VertexPlacement {
        VertexPlacement {
            x,
            y,
            rho: 0.0,
            alpha: 0.0,
            coreness,
            degree: 1,
            color,
            size: 2.0,
            owner: 0,
        }
    }

    fn layout(vertices: Vec<VertexPlacement>, edges: Vec<(usize, usize)>) -> Layout {
        let c_min = vertices.iter().map(|v| v.coreness).min().unwrap_or(0);
        let c_max = vertices.iter().map(|v| v.coreness).max().unwrap_or(0);
        Layout {
            vertices,
            nodes: vec![NodePlacement {
                x: 0.0,
                y: 0.0,
                unit: 1.0,
            }],
            edges,
            c_min,
            c_max,
            d_min: 1,
            d_max: 1,
        }
    }

    #[test]
    fn single_vertex_gives_one_circle() {
        let svg = render_svg(
            &layout(vec![vertex(0.0, 0.0, 0, Rgb(255, 0, 0))], vec![]),
            &RenderOptions::default(),
        );
        assert_eq!(svg.matches("<circle").count(), 1);
        assert!(svg.contains("cx=\"400.00\" cy=\"400.00\""));
    }

    #[test]
    fn edge_halves_take_endpoint_colors() {
        let violet = Rgb(128, 0, 255);
        let red = Rgb(255, 0, 0);
        let l = layout(
            vec![vertex(-1.0, 0.0, 1, violet), vertex(1.0, 0.0, 2, red)],
            vec![(0, 1)],
        );
        let svg = render_svg(&l, &RenderOptions::default());
        let lines: Vec<&str> = svg.lines().filter(|l| l.starts_with("<line")).collect();
        assert_eq!(lines.len(), 2);
        assert!(lines[0].contains("stroke=\"#8000ff\""));
        assert!(lines[1].contains("stroke=\"#ff0000\""));
        // Both halves end at the midpoint.
        assert!(lines[0].contains("x2=\"400.00\" y2=\"400.00\""));
        assert!(lines[1].contains("x2=\"400.00\" y2=\"400.00\""));
    }

    #[test]
    fn y_axis_points_up() {
        let l = layout(
            vec![
                vertex(0.0, 1.0, 1, Rgb(0, 0, 0)),
                vertex(0.0, -1.0, 1, Rgb(0, 0, 0)),
            ],
            vec![],
        );
        let svg = render_svg(&l, &RenderOptions::default());
        let circles: Vec<&str> = svg.lines().filter(|l| l.starts_with("<circle")).collect();
        // 2 units span 800 / 1.1 pixels.
        assert!(circles[0].contains("cy=\"36.36\""));
        assert!(circles[1].contains("cy=\"763.64\""));
    }

    #[test]
    fn high_coreness_is_drawn_last() {
        let l = layout(
            vec![
                vertex(0.0, 0.0, 3, Rgb(255, 0, 0)),
                vertex(1.0, 0.0, 1, Rgb(128, 0, 255)),
                vertex(2.0, 0.0, 2, Rgb(0, 255, 0)),
            ],
            vec![],
        );
        let svg = render_svg(&l, &RenderOptions::default());
        let fills: Vec<&str> = svg
            .lines()
            .filter(|l| l.starts_with("<circle"))
            .map(|l| l.split("fill=\"").nth(1).unwrap())
            .collect();
        assert!(fills[0].starts_with("#8000ff"));
        assert!(fills[1].starts_with("#00ff00"));
        assert!(fills[2].starts_with("#ff0000"));
    }

    #[test]
    fn empty_layout_still_has_legend() {
        let svg = render_svg(&layout(vec![], vec![]), &RenderOptions::default());
        assert!(svg.contains("<g id=\"legend\""));
        assert_eq!(svg.matches("<circle").count(), 0);
        assert!(svg.ends_with("</svg>\n"));
    }

    #[test]
    fn legend_swatches() {
        let single = render_legend(4, 4, 1, 9, 0.0, 400.0);
        assert_eq!(single.matches("<rect").count(), 1);
        let ten = render_legend(1, 10, 1, 9, 0.0, 400.0);
        assert_eq!(ten.matches("<rect").count(), 10);
        for c in 1..=10 {
            assert!(ten.contains(&format!("fill=\"{}\"", color_of(c, 1, 10).hex())));
        }
        let first = ten.find(&color_of(1, 1, 10).hex()).unwrap();
        let last = ten.find(&color_of(10, 1, 10).hex()).unwrap();
        assert!(first < last);
    }

    #[test]
    fn background_is_escaped() {
        let opts = RenderOptions {
            background: "a\"<b".into(),
            legend: false,
            ..Default::default()
        };
        let svg = render_svg(&layout(vec![], vec![]), &opts);
        assert!(svg.contains("fill=\"a&quot;&lt;b\""));
    }
}
