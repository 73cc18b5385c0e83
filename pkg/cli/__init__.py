"""
CLI module - command-line front end
"""
