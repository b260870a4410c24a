import setuptools

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setuptools.setup(
    name="weylbench",
    version="0.1.0",
    description="Exact verification workbench for connected quantized Weyl algebras, "
                "quantum cluster algebras and their Poisson limits",
    long_description=long_description,
    long_description_content_type="text/markdown",
    classifiers=[
        "Programming Language :: Python :: 3 :: Only",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    packages=setuptools.find_packages("./", exclude=[ "tests", "tests.*", "examples", "examples.*" ]),
    package_dir={ "weylbench" : "weylbench" },
    python_requires=">=3.8",
    install_requires=[
        "numpy",
        "pandas",
        "progress",
        "sympy",
    ],
    extras_require={
        "test": [ "pytest" ],
    },
    entry_points={
        "console_scripts": [
            "weylbench = weylbench.run.weylbench_main:main",
        ],
    },
)
