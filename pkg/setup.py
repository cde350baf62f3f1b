'''
Date: 2026-09-02 10:12:03
LastEditTime: 2026-10-16 19:02:48
Description: 
'''

from setuptools import setup, find_packages

setup(name='dq',
      packages=find_packages(include=['dq', 'dq.*']),
      package_data={'dq': ['config/*.yaml']},
      include_package_data=True,
      version='1.0.0',
      python_requires='>=3.8',
      install_requires=['numpy', 'pyyaml', 'joblib', 'tqdm'],
      extras_require={'test': ['pytest', 'hypothesis', 'sympy']},
      entry_points={'console_scripts': ['dq=dq.cli:main']})
