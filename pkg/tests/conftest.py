from diffmod import morphisms_equal_up_to


def assert_equal_up_to(f, g, max_weight, window=None):
    ok, failures = morphisms_equal_up_to(f, g, max_weight, window=window)
    assert ok, failures


def assert_not_equal_up_to(f, g, max_weight, window=None):
    ok, _ = morphisms_equal_up_to(f, g, max_weight, window=window)
    assert not ok
