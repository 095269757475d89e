pytest_plugins = ["test.fixtures.quivers", "test.fixtures.algebras"]
