# Empty __init__.py file to make tests a proper Python package 