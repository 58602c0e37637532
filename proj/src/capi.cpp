namespace {} 
