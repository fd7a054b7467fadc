"""Binary-addition-tree state enumeration"""
