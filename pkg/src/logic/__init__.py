"""Formula syntax: AST, parsing and rendering."""
