pub mod catalog;
pub mod config;
pub mod detect;
pub mod diff;
pub mod eval;
pub mod history;
pub mod index;
pub mod lexer;
pub mod output;
pub mod recommend;
pub mod representation;
pub mod similarity;
pub mod snippet;
pub mod timeline;
