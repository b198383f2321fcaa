mod document;
mod report;

pub use document::{
    parse_document, parse_set_arg, parse_space, serialize_document, serialize_space, LoadedSpace,
    PrimalSpec, SpaceDocument, TopologyMode, TopologySpec,
};
pub use report::{render_json, render_text};
