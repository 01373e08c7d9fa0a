//! Renders one example of each visual-prompt overlay into the current
//! directory: ruler.png, compass.png, marks.png, zoom.png.

use std::path::Path;
use std::sync::Arc;

use vpdet::geometry::{convex_hull, AxisBox, ImageDims, Point};
use vpdet::render::{
    mark_boxes, mark_centroids, mark_convex_hull, mark_scene_graph, overlay_compass,
    overlay_ruler, zoom_region, Canvas, OverlayStyle,
};

fn sample_scene() -> Canvas {
    let dims = ImageDims::new(640, 480).unwrap();
    let mut c = Canvas::filled(dims, [40, 60, 80]);
    c.fill_rect(80, 300, 240, 420, [180, 140, 90]);
    c.fill_rect(380, 120, 560, 260, [90, 160, 120]);
    c.fill_rect(300, 380, 340, 420, [200, 80, 80]);
    c
}

fn main() {
    let scene = sample_scene();
    let style = OverlayStyle::default();

    let ruler = overlay_ruler(&scene, &style).unwrap();
    ruler.save_png(Path::new("ruler.png")).unwrap();

    let compass = overlay_compass(&ruler, Point::new(0.5, 0.5).unwrap(), 0.35, &style).unwrap();
    compass.save_png(Path::new("compass.png")).unwrap();

    let items = vec![
        (0usize, "table".to_string(), AxisBox::new(0.125, 0.625, 0.375, 0.875).unwrap()),
        (1usize, "plant".to_string(), AxisBox::new(0.59, 0.25, 0.875, 0.54).unwrap()),
        (2usize, "mug".to_string(), AxisBox::new(0.468, 0.79, 0.53, 0.875).unwrap()),
    ];
    let mut marked = mark_boxes(&scene, &items, &style).unwrap();
    let hull = convex_hull(&[
        Point::new(0.2, 0.3).unwrap(),
        Point::new(0.5, 0.18).unwrap(),
        Point::new(0.75, 0.4).unwrap(),
        Point::new(0.6, 0.8).unwrap(),
        Point::new(0.25, 0.7).unwrap(),
    ])
    .unwrap();
    marked = mark_convex_hull(&marked, &hull, &style).unwrap();
    let nodes: Vec<(usize, AxisBox)> = items.iter().map(|(i, _, b)| (*i, *b)).collect();
    let edges = vec![
        (0usize, 2usize, "on top".to_string()),
        (1usize, 0usize, "behind".to_string()),
    ];
    marked = mark_scene_graph(&marked, &nodes, &edges, &style).unwrap();
    let centroids = vec![
        ("table".to_string(), Point::new(0.25, 0.75).unwrap()),
        ("plant".to_string(), Point::new(0.73, 0.4).unwrap()),
    ];
    marked = mark_centroids(&marked, &centroids, &style).unwrap();
    marked.save_png(Path::new("marks.png")).unwrap();

    let region = AxisBox::new(0.4, 0.6, 0.7, 0.95).unwrap();
    let (zoomed, map) = zoom_region(&scene, region, scene.dims()).unwrap();
    zoomed.save_png(Path::new("zoom.png")).unwrap();
    let _ = Arc::new(map);
    println!("wrote ruler.png, compass.png, marks.png, zoom.png");
}
