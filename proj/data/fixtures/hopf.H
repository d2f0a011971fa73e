1-t+q*t+a*q
