"""Settings, output formatting, SVG export, generators and the bench harness."""
