// tkinv_main.cpp -- command-line front end.
int main() { return 1; }
