def pytest_configure(config):
    config.addinivalue_line(
        "markers", "slow: long seeded sweeps, deselect with -m 'not slow'"
    )
