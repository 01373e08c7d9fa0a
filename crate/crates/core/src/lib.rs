//! Zero-shot object detection through a text-completing multimodal endpoint.
//!
//! The crate drives a chat-style model through an iterative detection loop:
//! a query image is annotated with measurement overlays and markers, the
//! model's replies are parsed into tool requests or coordinate answers, and
//! final boxes are mapped back to the original frame. A deterministic replay
//! backend makes the whole pipeline testable without a live model.

pub mod geometry;
pub mod parser;
pub mod prompts;
pub mod render;
