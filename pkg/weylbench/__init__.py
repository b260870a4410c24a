# -*- coding: utf-8 -*-

__docformat__ = "javadoc en"
__doc__ = \
"""
@brief WeylBench - exact verification workbench for connected quantized
       Weyl algebras, quantum cluster algebras and their Poisson limits
@license MIT
@version 0.1.0
"""

__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Development"

hard_deps = (
    "numpy",
    "pandas",
    "progress",
    "sympy",
)
missing_deps = [ ]

for dep in hard_deps:
    try:
        __import__(dep)
    except ImportError as e:
        missing_deps.append(f"{dep}: {e}")

if len(missing_deps) > 0:
    raise ImportError(f"Failed to locate some dependencies: \n" + "\n".join(missing_deps))
