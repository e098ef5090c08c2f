"""Random family generation, remark surfaces, file formats and the CLI."""
