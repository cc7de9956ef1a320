def test_import_packages():
    """Test that importing our package works."""
    import nsshift
    import nsshift.cli
