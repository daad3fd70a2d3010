//! Text formats: expressions, model files, DOT and JSON.

mod dot;
mod expr;
mod json;
mod model;

pub use dot::{hasse_slice_dot, state_graph_dot, DotGraph};
pub use expr::{
    parse_ast, parse_expression, parse_expression_with, render_function, Expr, ParseOptions,
    ParsedExpression,
};
pub use json::{
    network_json, slice_json, state_graph_json, ComponentJson, NetworkJson, RegulatorJson,
    SliceJson, StateGraphJson, StepJson,
};
pub use model::{
    parse_function_for, parse_model, parse_model_with, render_component, render_model, Declaration,
    ModelDocument, ResolvedComponent,
};
