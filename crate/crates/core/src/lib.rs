pub mod block;
pub mod cli;
pub mod floorplan;
pub mod gen_driver;
pub mod oracles;
pub mod patterns;
pub mod permlang;
pub mod rect_core;
pub mod rect_edit;
pub mod rect_tree;
pub mod render;
pub mod tables;
