#!/usr/bin/env python
from setuptools import setup, find_packages, Command
from respdeg import APP_VERSION


class generate_configuration_files(Command):
    description = "Generate the commented respdeg configuration file"
    user_options = []

    def initialize_options(self):
        pass

    def finalize_options(self):
        pass

    def run(self):
        from respdeg.setup import generate_config_files
        generate_config_files()


required_packages = [
    'appdirs>=1.4.0',
    'prettytable>=0.7.2',
    'colorlog>=2.7.0',
    'numpy>=1.20',
    'pydantic>=2.0',
]

with open('README.md', encoding='utf8') as readme:
    long_description = readme.read()

setup_options = {
    'name': 'respdeg',
    'version': APP_VERSION,
    'author': 'respdeg developers',
    'license': 'MIT',
    'description': 'Degrees of coalition responsibility in concurrent game structures',
    'long_description': long_description,
    'long_description_content_type': 'text/markdown',
    'keywords': 'concurrent game structure,coalition,responsibility,safety game',
    'classifiers': [
        "Development Status :: 4 - Beta",
        "Environment :: Console",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Natural Language :: English",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3 :: Only",
        "Topic :: Scientific/Engineering :: Mathematics"
    ],
    'provides': ['respdeg'],
    'packages': find_packages(exclude=['tests', 'tests.*']),
    'python_requires': '>=3.9',
    'zip_safe': False,
    'install_requires': required_packages,
    'extras_require': {
        'test': ['pytest', 'hypothesis'],
    },
    'entry_points': {
        'console_scripts': [
            'respdeg = respdeg:client_main',
        ]
    },
    'cmdclass': {
        'generate_configuration_files': generate_configuration_files
    }
}

setup(**setup_options)
