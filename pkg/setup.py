from setuptools import setup

setup(
    name='inetcalc',
    version='0.1.0',
    description='command line tools to write, reduce and inspect interaction nets',
    license='MIT',
    packages=[
        'inetcalc',
        'inetcalc.scripts',
        'inetcalc.tests'
    ],
    package_data={
        'inetcalc': ['profiles/*.inet']
    },
    install_requires=[
        'click',
        'demjson3',
        'parsimonious',
        'numpy',
        'texttable'
    ],
    entry_points={
        'console_scripts':
            [
                'inetcalc=inetcalc.scripts.main:cli',
                'inet-run=inetcalc.scripts.run:command',
                'inet-trace=inetcalc.scripts.trace:command',
                'inet-check=inetcalc.scripts.check:command',
                'inet-bench=inetcalc.scripts.bench:command'
            ]
    },
    python_requires='>=3.7',
    zip_safe=False
)
