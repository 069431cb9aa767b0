__version__ = "1.0.0"

__all__=["Permutation", "ABBase", "Coupler", "CodeFactory", "SCCodeSpec", "AbsCounter", "LineCounter",
         "WindowedCounter", "Objective", "Optimizer", "SearchConfig"]
